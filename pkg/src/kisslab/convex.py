"""Convex polygons, Minkowski sums, relative distances and gauges."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .geom import ORIGIN, Location, Point, Segment, point_location, signed_area


class DegenerateHullError(ValueError):
    pass


class NotSymmetricError(ValueError):
    pass


class InconsistentSymmetralError(AssertionError):
    """A parallelogram symmetral whose body is not its translate."""


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, counterclockwise, starting at its lexicographic minimum."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        n = len(vs)
        if n < 3:
            raise DegenerateHullError("convex polygon needs at least 3 vertices")
        for i in range(n):
            if (vs[i] - vs[i - 1]).cross(vs[(i + 1) % n] - vs[i]) <= 0:
                raise ValueError("vertices are not in strictly convex counterclockwise position")

    @classmethod
    def from_points(cls, points: Iterable[Point | tuple]) -> ConvexPolygon:
        return convex_hull(points)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> list[Segment]:
        n = len(self.vertices)
        return [Segment(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def edge_vectors(self) -> list[Point]:
        n = len(self.vertices)
        return [self.vertices[(i + 1) % n] - self.vertices[i] for i in range(n)]

    @property
    def area(self) -> Fraction:
        return signed_area(self.vertices)

    def translate(self, t: Point) -> ConvexPolygon:
        return ConvexPolygon(tuple(v + t for v in self.vertices))

    def scale(self, k) -> ConvexPolygon:
        k = Fraction(k)
        if k > 0:
            return ConvexPolygon(tuple(v * k for v in self.vertices))
        if k < 0:
            return convex_hull(v * k for v in self.vertices)
        raise DegenerateHullError("scaling by zero")

    def __neg__(self) -> ConvexPolygon:
        return self.scale(-1)

    def locate(self, p: Point) -> Location:
        return point_location(p, self.vertices)

    def contains(self, p: Point) -> bool:
        return self.locate(p) is not Location.EXTERIOR

    def is_centrally_symmetric(self, center: Point = ORIGIN) -> bool:
        vs = set(self.vertices)
        return all(center * 2 - v in vs for v in vs)

    def is_parallelogram(self) -> bool:
        vs = self.vertices
        return len(vs) == 4 and vs[0] + vs[2] == vs[1] + vs[3]


def _canonical(vs: list[Point]) -> tuple[Point, ...]:
    k = vs.index(min(vs))
    return tuple(vs[k:] + vs[:k])


def convex_hull(points: Iterable[Point | tuple]) -> ConvexPolygon:
    """Monotone-chain hull keeping only strict corners."""
    pts = sorted({p if isinstance(p, Point) else Point(*p) for p in points})
    if len(pts) < 3:
        raise DegenerateHullError("fewer than 3 distinct points")

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and (out[-1] - out[-2]).cross(p - out[-1]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateHullError("all points are collinear")
    return ConvexPolygon(_canonical(hull))


def _start_index(vs: Sequence[Point]) -> int:
    # lowest y, then lowest x: edge angles from here increase monotonically in [0, 2pi)
    return min(range(len(vs)), key=lambda i: (vs[i].y, vs[i].x))


def _edge_key_lt(u: Point, v: Point) -> bool:
    """Polar angle of u in [0, 2pi) is smaller than that of v."""
    hu = 0 if (u.y > 0 or (u.y == 0 and u.x > 0)) else 1
    hv = 0 if (v.y > 0 or (v.y == 0 and v.x > 0)) else 1
    if hu != hv:
        return hu < hv
    return u.cross(v) > 0


def minkowski_sum(A: ConvexPolygon, B: ConvexPolygon) -> ConvexPolygon:
    """A + B by merging the two edge sequences in angular order."""
    ia, ib = _start_index(A.vertices), _start_index(B.vertices)
    av = A.vertices[ia:] + A.vertices[:ia]
    bv = B.vertices[ib:] + B.vertices[:ib]
    ea = [av[(i + 1) % len(av)] - av[i] for i in range(len(av))]
    eb = [bv[(i + 1) % len(bv)] - bv[i] for i in range(len(bv))]
    out = [av[0] + bv[0]]
    i = j = 0
    while i < len(ea) or j < len(eb):
        if j == len(eb) or (i < len(ea) and _edge_key_lt(ea[i], eb[j])):
            step = ea[i]
            i += 1
        elif i == len(ea) or _edge_key_lt(eb[j], ea[i]):
            step = eb[j]
            j += 1
        else:
            step = ea[i] + eb[j]
            i += 1
            j += 1
        out.append(out[-1] + step)
    out.pop()
    return ConvexPolygon(_canonical(out))


def difference_body(K: ConvexPolygon) -> ConvexPolygon:
    return minkowski_sum(K, -K)


def central_symmetral(K: ConvexPolygon) -> ConvexPolygon:
    return difference_body(K).scale(Fraction(1, 2))


def _chord_params(D: ConvexPolygon, base: Point, d: Point) -> tuple[Fraction, Fraction] | None:
    """Parameter interval {t : base + t*d in D}, or None when empty."""
    lo, hi = None, None
    n = len(D.vertices)
    for i in range(n):
        a, b = D.vertices[i], D.vertices[(i + 1) % n]
        e = b - a
        c0 = e.cross(base - a)
        c1 = e.cross(d)
        # c0 + t*c1 >= 0
        if c1 == 0:
            if c0 < 0:
                return None
            continue
        t = -c0 / c1
        if c1 > 0:
            lo = t if lo is None or t > lo else lo
        else:
            hi = t if hi is None or t < hi else hi
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def _chord(D: ConvexPolygon, base: Point, d: Point) -> Segment | None:
    params = _chord_params(D, base, d)
    if params is None:
        return None
    r, s = base + d * params[0], base + d * params[1]
    return Segment(min(r, s), max(r, s))


def longest_chord(D: ConvexPolygon, direction: Point) -> Segment:
    """A longest chord of D parallel to ``direction``.

    Chord length is concave in the offset of the line, so a maximum sits on
    a line through a vertex.  Among maximizers the lexicographically
    smallest (low endpoint, high endpoint) pair wins.
    """
    if direction.is_zero():
        raise ValueError("direction must be nonzero")
    best, best_len = None, None
    for v in D.vertices:
        params = _chord_params(D, v, direction)
        if params is None:
            continue
        length = params[1] - params[0]
        seg = _chord(D, v, direction)
        key = (seg.a, seg.b)
        if best is None or length > best_len or (length == best_len and key < (best.a, best.b)):
            best, best_len = seg, length
    return best


def parallel_ratio(u: Point, v: Point) -> Fraction:
    """|u| / |v| for parallel vectors u, v (v nonzero)."""
    if u.cross(v) != 0:
        raise ValueError("vectors are not parallel")
    return abs(u.dot(v) / v.dot(v))


def relative_distance(D: ConvexPolygon, p: Point, q: Point) -> Fraction:
    """2 |p - q| / |r - s| with [r, s] a longest chord of D parallel to p - q."""
    if p == q:
        return Fraction(0)
    chord = longest_chord(D, q - p)
    return 2 * parallel_ratio(q - p, chord.vector)


def gauge(B: ConvexPolygon, v: Point) -> Fraction:
    """min {t >= 0 : v in tB}; requires the origin strictly inside B."""
    if v.is_zero():
        return Fraction(0)
    best = Fraction(0)
    n = len(B.vertices)
    for i in range(n):
        a, b = B.vertices[i], B.vertices[(i + 1) % n]
        e = b - a
        h = -e.cross(a)
        if h <= 0:
            raise ValueError("origin is not interior to the unit ball")
        g = -e.cross(v) / h
        if g > best:
            best = g
    return best


def minkowski_perimeter(C: ConvexPolygon, B: ConvexPolygon) -> Fraction:
    """Perimeter of C in the norm whose unit ball is B."""
    if not B.is_centrally_symmetric():
        raise NotSymmetricError("unit ball must be centrally symmetric about the origin")
    return sum((gauge(B, e) for e in C.edge_vectors()), Fraction(0))


def parallelogram_translate_witness(K: ConvexPolygon) -> Point | None:
    """t with K = t + symmetral(K) when the symmetral is a parallelogram."""
    sym = central_symmetral(K)
    if not sym.is_parallelogram():
        return None
    t = sum(K.vertices, ORIGIN) / len(K.vertices)
    if len(K.vertices) != 4 or sym.translate(t).vertices != K.vertices:
        raise InconsistentSymmetralError("symmetral is a parallelogram but K is not its translate")
    return t
