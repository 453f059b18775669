"""Pockets, star kernels and Hadwiger-number bounds for polygonal disks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .convex import ConvexPolygon, DegenerateHullError, convex_hull
from .geom import ORIGIN, Point, Relation, Segment, SimplePolygon, disk_relation
from .star import SegmentStar


class Tag(str, enum.Enum):
    GRUENBAUM8 = "Gruenbaum8"
    GRUENBAUM6 = "Gruenbaum6"
    POCKET8 = "Pocket8"
    POCKET6 = "Pocket6"
    STARLIKE35 = "Starlike35"
    CENTRALLY_SYMMETRIC_STARLIKE12 = "CentrallySymmetricStarlike12"
    GENERAL_LOWER6 = "GeneralLower6"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class PocketReport:
    hull: ConvexPolygon
    pockets: tuple[SimplePolygon, ...]

    @property
    def count(self) -> int:
        return len(self.pockets)


@dataclass(frozen=True)
class ParallelogramLikeWitness:
    v: Point
    bottom: Segment
    top: Segment


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int | None  # None = unbounded
    rationale: tuple[Tag, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    @property
    def exact(self) -> int | None:
        return self.lower if self.upper == self.lower else None


def _on_boundary(hull: ConvexPolygon, p: Point) -> bool:
    return any(e.contains(p) for e in hull.edges())


def pockets(J: SimplePolygon) -> PocketReport:
    """Components of conv(J) minus J, each as a counterclockwise polygon.

    A pocket runs along the boundary of J between two consecutive vertices
    of J that lie on the hull boundary but are not joined by an edge of J.
    """
    hull = convex_hull(J.vertices)
    vs = J.vertices
    n = len(vs)
    on_hull = [i for i in range(n) if _on_boundary(hull, vs[i])]
    found = []
    for k, i in enumerate(on_hull):
        j = on_hull[(k + 1) % len(on_hull)]
        if (i + 1) % n == j:
            continue
        chain = [vs[(i + s) % n] for s in range(((j - i) % n) + 1)]
        found.append(SimplePolygon(reversed(chain)))
    return PocketReport(hull, tuple(found))


def _clip(poly: list[Point], a: Point, b: Point) -> list[Point]:
    """Keep the part of ``poly`` on the closed left side of line a->b."""
    e = b - a
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp, sq = e.cross(p - a), e.cross(q - a)
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append(p + (q - p) * t)
    dedup: list[Point] = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def kernel_vertices(J: SimplePolygon) -> tuple[Point, ...]:
    """Vertices of the star kernel; may be 1 or 2 points when degenerate."""
    region = list(convex_hull(J.vertices).vertices)
    for e in J.edges():
        region = _clip(region, e.a, e.b)
        if not region:
            return ()
    return tuple(region)


def star_kernel(J: SimplePolygon) -> ConvexPolygon | None:
    """The set of centers J is starlike relative to.

    None when the kernel is empty or has no interior; use
    :func:`kernel_vertices` to see degenerate kernels.
    """
    pts = kernel_vertices(J)
    try:
        return convex_hull(pts)
    except DegenerateHullError:
        return None


def is_starlike(J: SimplePolygon) -> bool:
    return bool(kernel_vertices(J))


def is_starlike_at(J: SimplePolygon, c: Point) -> bool:
    return all((e.b - e.a).cross(c - e.a) >= 0 for e in J.edges())


def kernel_center(J: SimplePolygon) -> Point | None:
    """The origin if it lies in the kernel, else the kernel's vertex average."""
    pts = kernel_vertices(J)
    if not pts:
        return None
    if is_starlike_at(J, ORIGIN):
        return ORIGIN
    return sum(pts, ORIGIN) / len(pts)


def _line_components(J: SimplePolygon, a: Point, d: Point) -> list[Segment]:
    """Connected components of J on a supporting line of conv J.

    The line passes through ``a`` with direction ``d``.  Points of J on a
    supporting line lie on the boundary, so the components are built from
    vertices and edges lying on the line, as sorted intervals along ``d``.
    """
    on = [v for v in J.vertices if d.cross(v - a) == 0]
    intervals = [(d.dot(v - a), d.dot(v - a)) for v in on]
    for e in J.edges():
        if d.cross(e.a - a) == 0 and d.cross(e.b - a) == 0:
            s, t = sorted((d.dot(e.a - a), d.dot(e.b - a)))
            intervals.append((s, t))
    intervals.sort()
    merged: list[list[Fraction]] = []
    for s, t in intervals:
        if merged and s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], t)
        else:
            merged.append([s, t])
    dd = d.dot(d)
    return [Segment(a + d * (s / dd), a + d * (t / dd)) for s, t in merged]


def parallelogram_like_witness(J: SimplePolygon) -> ParallelogramLikeWitness | None:
    """Search hull-edge directions for the two-equal-segments-and-touch condition.

    Only hull edge directions can give positive-length intersections with
    both supporting lines, so the scan is exhaustive.
    """
    hull = convex_hull(J.vertices)
    for edge in hull.edges():
        d = edge.vector
        # opposite supporting line: vertex minimizing the left-side offset
        far = min(hull.vertices, key=lambda v: (-d.cross(v - edge.a), v))
        bottom = _line_components(J, edge.a, d)
        top = _line_components(J, far, d)
        if len(bottom) != 1 or len(top) != 1:
            continue
        b, t = bottom[0], top[0]
        if b.degenerate or t.degenerate or b.vector != t.vector:
            continue
        for v in (b.vector, -b.vector):
            if disk_relation(J, J.translate(v)) is Relation.TOUCH:
                return ParallelogramLikeWitness(v, b, t)
    return None


def symmetry_center(J: SimplePolygon) -> Point | None:
    """Center of point symmetry of the vertex set, if any."""
    c = sum(J.vertices, ORIGIN) / len(J.vertices)
    vs = set(J.vertices)
    if all(c * 2 - v in vs for v in vs):
        return c
    return None


Shape = Union[SimplePolygon, SegmentStar]


def hadwiger_bounds(J: Shape) -> BoundsReport:
    if isinstance(J, SegmentStar):
        return BoundsReport(0, None, ())
    report = pockets(J)
    if report.count == 0:
        if report.hull.is_parallelogram():
            return BoundsReport(8, 8, (Tag.GRUENBAUM8,))
        return BoundsReport(6, 6, (Tag.GRUENBAUM6,))
    if report.count == 1:
        if parallelogram_like_witness(J) is not None:
            return BoundsReport(8, 8, (Tag.POCKET8,))
        return BoundsReport(6, 6, (Tag.POCKET6,))
    if is_starlike(J):
        c = symmetry_center(J)
        if c is not None and is_starlike_at(J, c):
            return BoundsReport(6, 12, (Tag.GENERAL_LOWER6, Tag.STARLIKE35, Tag.CENTRALLY_SYMMETRIC_STARLIKE12))
        return BoundsReport(6, 35, (Tag.GENERAL_LOWER6, Tag.STARLIKE35))
    return BoundsReport(6, None, (Tag.GENERAL_LOWER6, Tag.UNBOUNDED))
