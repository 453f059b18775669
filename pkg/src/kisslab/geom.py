"""Exact rational points, segments and simple polygons.

Every predicate here works on exact rationals (``fractions.Fraction``).  The
hot paths rescale both operands to a common integer grid first so that the
inner loops only touch Python ints.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

Scalar = Fraction
RationalLike = Union[int, Fraction, str]


def as_scalar(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True, order=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x: RationalLike, y: RationalLike):
        object.__setattr__(self, "x", as_scalar(x))
        object.__setattr__(self, "y", as_scalar(y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __mul__(self, k: RationalLike) -> Point:
        k = as_scalar(k)
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: RationalLike) -> Point:
        k = as_scalar(k)
        return Point(self.x / k, self.y / k)

    def cross(self, other: Point) -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: Point) -> Fraction:
        return self.x * other.x + self.y * other.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


Vector = Point
ORIGIN = Point(0, 0)


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class SegmentRelation(enum.Enum):
    PROPER_CROSS = "ProperCross"
    TOUCH = "Touch"
    COLLINEAR_OVERLAP = "CollinearOverlap"
    DISJOINT = "Disjoint"


class Location(enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    EXTERIOR = "Exterior"


class Relation(enum.Enum):
    OVERLAP = "Overlap"
    TOUCH = "Touch"
    DISJOINT = "Disjoint"


class DegenerateSegmentError(ValueError):
    pass


class InvalidPolygonError(ValueError):
    """Raised for vertex lists that do not bound a simple polygon.

    ``edges`` holds the offending pair of edge indices when the failure is a
    self-intersection.
    """

    def __init__(self, message: str, edges: tuple[int, int] | None = None):
        super().__init__(message)
        self.edges = edges


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(_sign((q - p).cross(r - p)))


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point
    b: Point

    @property
    def degenerate(self) -> bool:
        return self.a == self.b

    @property
    def vector(self) -> Point:
        return self.b - self.a

    def translate(self, t: Point) -> Segment:
        return Segment(self.a + t, self.b + t)

    def contains(self, p: Point) -> bool:
        return _contains_exact(self, p)


def _contains_exact(s: Segment, p: Point) -> bool:
    if (s.b - s.a).cross(p - s.a) != 0:
        return False
    return min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x) and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y)


# --- integer kernels -------------------------------------------------------
# Points are (int, int) tuples on a common grid.

def _lcm_of_denominators(points: Iterable[Point]) -> int:
    d = 1
    for p in points:
        d = math.lcm(d, p.x.denominator, p.y.denominator)
    return d


def _ipt(p: Point, scale: int) -> tuple[int, int]:
    return (p.x.numerator * (scale // p.x.denominator), p.y.numerator * (scale // p.y.denominator))


def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a, b, p) -> bool:
    """p on closed segment [a, b] (a may equal b)."""
    if (b[0] - a[0]) * (p[1] - a[1]) != (b[1] - a[1]) * (p[0] - a[0]):
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _seg_rel(a, b, c, d) -> SegmentRelation:
    o1 = _orient(c, d, a)
    o2 = _orient(c, d, b)
    o3 = _orient(a, b, c)
    o4 = _orient(a, b, d)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return SegmentRelation.PROPER_CROSS
    if o1 == 0 and o2 == 0:
        # collinear: project on the dominant axis
        k = 0 if a[0] != b[0] else 1
        lo1, hi1 = sorted((a[k], b[k]))
        lo2, hi2 = sorted((c[k], d[k]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo < hi:
            return SegmentRelation.COLLINEAR_OVERLAP
        if lo == hi:
            return SegmentRelation.TOUCH
        return SegmentRelation.DISJOINT
    if (o1 == 0 and _on_segment(c, d, a)) or (o2 == 0 and _on_segment(c, d, b)) \
            or (o3 == 0 and _on_segment(a, b, c)) or (o4 == 0 and _on_segment(a, b, d)):
        return SegmentRelation.TOUCH
    return SegmentRelation.DISJOINT


def _locate(p, poly) -> tuple[Location, int]:
    """Locate ``p`` against the closed polygon ``poly``.

    The second item is the index of the edge containing ``p`` when it is on
    the boundary (edge i runs from vertex i to vertex i+1), else -1.
    """
    n = len(poly)
    for i in range(n):
        if _on_segment(poly[i], poly[(i + 1) % n], p):
            return Location.BOUNDARY, i
    px, py = p
    inside = False
    for i in range(n):
        ax, ay = poly[i]
        bx, by = poly[(i + 1) % n]
        if (ay > py) != (by > py):
            num = (ax - px) * (by - ay) + (py - ay) * (bx - ax)
            if (num > 0) == (by > ay):
                inside = not inside
    return (Location.INTERIOR if inside else Location.EXTERIOR), -1


def _half(r, d) -> int:
    c = r[0] * d[1] - r[1] * d[0]
    if c > 0 or (c == 0 and r[0] * d[0] + r[1] * d[1] > 0):
        return 0
    return 1


def _ang_lt(r, d1, d2) -> bool:
    """CCW angle of d1 from r is strictly less than that of d2."""
    h1, h2 = _half(r, d1), _half(r, d2)
    if h1 != h2:
        return h1 < h2
    return d1[0] * d2[1] - d1[1] * d2[0] > 0


def _wedges_meet(sa, ea, sb, eb) -> bool:
    """Whether two open angular sectors share a direction.

    A sector (s, e) sweeps counterclockwise from direction s to direction e;
    its opening lies strictly between 0 and 2*pi.
    """
    # disjoint iff, measured from ea: ang(sb) < ang(eb) <= ang(sa)
    if not _ang_lt(ea, sb, eb):
        return True
    return _ang_lt(ea, sa, eb)


def _vertex_wedge(poly, i):
    n = len(poly)
    v, nx, pv = poly[i], poly[(i + 1) % n], poly[i - 1]
    return (nx[0] - v[0], nx[1] - v[1]), (pv[0] - v[0], pv[1] - v[1])


def _edge_wedge(poly, i):
    n = len(poly)
    a, b = poly[i], poly[(i + 1) % n]
    d = (b[0] - a[0], b[1] - a[1])
    return d, (-d[0], -d[1])


def _bbox(poly):
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def _relate_int(P, Q, edges_p=None, edges_q=None):
    """Relation of two CCW simple polygons on a common integer grid.

    Returns (Relation, witness) where witness is the lexicographically
    smallest boundary contact (an integer point) when the polygons touch.
    Only orientation predicates on input vertices are evaluated: the
    polygons overlap iff two edges cross properly, a vertex of one is
    interior to the other, or the interior sectors at some boundary contact
    share a direction.
    """
    bp, bq = _bbox(P), _bbox(Q)
    if bp[2] < bq[0] or bq[2] < bp[0] or bp[3] < bq[1] or bq[3] < bp[1]:
        return Relation.DISJOINT, None
    n, m = len(P), len(Q)
    touched = False
    for i in range(n):
        a, b = P[i], P[(i + 1) % n]
        for j in range(m):
            rel = _seg_rel(a, b, Q[j], Q[(j + 1) % m])
            if rel is SegmentRelation.PROPER_CROSS:
                return Relation.OVERLAP, None
            if rel is not SegmentRelation.DISJOINT:
                touched = True
    contacts = []
    for A, B in ((P, Q), (Q, P)):
        verts_b = {v: k for k, v in enumerate(B)}
        for i, v in enumerate(A):
            loc, edge = _locate(v, B)
            if loc is Location.INTERIOR:
                return Relation.OVERLAP, None
            if loc is Location.EXTERIOR:
                continue
            sa, ea = _vertex_wedge(A, i)
            k = verts_b.get(v)
            if k is not None:
                sb, eb = _vertex_wedge(B, k)
            else:
                sb, eb = _edge_wedge(B, edge)
            if _wedges_meet(sa, ea, sb, eb):
                return Relation.OVERLAP, None
            contacts.append(v)
    if not touched:
        return Relation.DISJOINT, None
    return Relation.TOUCH, min(contacts)


# --- polygons ---------------------------------------------------------------

def signed_area(points: Sequence[Point]) -> Fraction:
    n = len(points)
    s = Fraction(0)
    for i in range(n):
        s += points[i].cross(points[(i + 1) % n])
    return s / 2


def _normalize_ring(points: Sequence[Point]) -> list[Point]:
    pts = list(points)
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        out: list[Point] = []
        n = len(pts)
        for i in range(n):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % n]
            if cur == prev:
                changed = True
                continue
            if (cur - prev).cross(nxt - cur) == 0 and (cur - prev).dot(nxt - cur) > 0:
                changed = True
                continue
            out.append(cur)
        pts = out
    return pts


class SimplePolygon:
    """A polygonal topological disk with exact rational vertices.

    Construction normalizes the input: repeated vertices and interior
    vertices of straight runs are dropped, orientation is made
    counterclockwise and the sequence is rotated to start at the
    lexicographically smallest vertex.  Self-intersecting input raises
    :class:`InvalidPolygonError`.
    """

    __slots__ = ("vertices", "__dict__")

    def __init__(self, vertices: Iterable[Point | tuple]):
        pts = [v if isinstance(v, Point) else Point(*v) for v in vertices]
        pts = _normalize_ring(pts)
        if len(pts) < 3:
            raise InvalidPolygonError("a polygon needs at least 3 non-collinear vertices")
        _check_simple(pts)
        if signed_area(pts) < 0:
            pts.reverse()
        k = pts.index(min(pts))
        pts = pts[k:] + pts[:k]
        self.vertices: tuple[Point, ...] = tuple(pts)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplePolygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "SimplePolygon([" + ", ".join(f"({v.x}, {v.y})" for v in self.vertices) + "])"

    def edges(self) -> list[Segment]:
        n = len(self.vertices)
        return [Segment(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    @cached_property
    def area(self) -> Fraction:
        return signed_area(self.vertices)

    @cached_property
    def denominator(self) -> int:
        return _lcm_of_denominators(self.vertices)

    def translate(self, t: Point) -> SimplePolygon:
        return _trusted(tuple(v + t for v in self.vertices))

    def scale(self, k: RationalLike) -> SimplePolygon:
        k = as_scalar(k)
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return _trusted(tuple(v * k for v in self.vertices))

    def affine_image(self, matrix, offset: Point = ORIGIN) -> SimplePolygon:
        (a, b), (c, d) = matrix
        return SimplePolygon(Point(a * v.x + b * v.y, c * v.x + d * v.y) + offset for v in self.vertices)

    def int_coords(self, scale: int) -> list[tuple[int, int]]:
        return [_ipt(v, scale) for v in self.vertices]


def _trusted(vertices: tuple[Point, ...]) -> SimplePolygon:
    # translation / positive scaling preserve every normalization invariant
    poly = SimplePolygon.__new__(SimplePolygon)
    poly.vertices = vertices
    return poly


def _check_simple(pts: Sequence[Point]) -> None:
    d = _lcm_of_denominators(pts)
    P = [_ipt(p, d) for p in pts]
    n = len(P)
    for i in range(n):
        a, b = P[i], P[(i + 1) % n]
        for j in range(i + 1, n):
            c, e = P[j], P[(j + 1) % n]
            rel = _seg_rel(a, b, c, e)
            if rel is SegmentRelation.DISJOINT:
                continue
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent and rel is SegmentRelation.TOUCH:
                continue
            raise InvalidPolygonError(f"edges {i} and {j} intersect", (i, j))


# --- public predicates ------------------------------------------------------

def segments_relation(s: Segment, t: Segment) -> SegmentRelation:
    if s.degenerate or t.degenerate:
        raise DegenerateSegmentError("segments_relation needs nondegenerate segments")
    d = _lcm_of_denominators((s.a, s.b, t.a, t.b))
    return _seg_rel(_ipt(s.a, d), _ipt(s.b, d), _ipt(t.a, d), _ipt(t.b, d))


def point_location(p: Point, poly: SimplePolygon | Sequence[Point]) -> Location:
    verts = poly.vertices if isinstance(poly, SimplePolygon) else tuple(poly)
    d = math.lcm(_lcm_of_denominators(verts), p.x.denominator, p.y.denominator)
    return _locate(_ipt(p, d), [_ipt(v, d) for v in verts])[0]


def _relate(P: Sequence[Point], Q: Sequence[Point]) -> tuple[Relation, Point | None]:
    d = _lcm_of_denominators(P)
    d = math.lcm(d, _lcm_of_denominators(Q))
    rel, w = _relate_int([_ipt(v, d) for v in P], [_ipt(v, d) for v in Q])
    if w is not None:
        w = Point(Fraction(w[0], d), Fraction(w[1], d))
    return rel, w


def disk_relation(P: SimplePolygon, Q: SimplePolygon) -> Relation:
    """Overlap if the interiors meet, Touch if only the boundaries do."""
    return _relate(P.vertices, Q.vertices)[0]


def touch_witness(P: SimplePolygon, Q: SimplePolygon) -> Point | None:
    """Lexicographically smallest common point of two touching polygons.

    Returns None unless the polygons touch.
    """
    return _relate(P.vertices, Q.vertices)[1]
