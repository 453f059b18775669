"""Starlike sets of segments: closed arms sharing one center."""

from __future__ import annotations

import math

from .geom import Point, Segment, SegmentRelation, _ang_lt, _ipt, _lcm_of_denominators, _on_segment, _seg_rel


class SegmentStar:
    """Union of the closed segments [center, e] over the arm endpoints e."""

    __slots__ = ("center", "arm_endpoints")

    def __init__(self, center: Point | tuple, arm_endpoints):
        center = center if isinstance(center, Point) else Point(*center)
        ends = tuple(e if isinstance(e, Point) else Point(*e) for e in arm_endpoints)
        if len(ends) < 2:
            raise ValueError("a segment star needs at least 2 arms")
        for i, e in enumerate(ends):
            if e == center:
                raise ValueError(f"arm {i} is degenerate")
            for j in range(i):
                u, v = e - center, ends[j] - center
                if u.cross(v) == 0 and u.dot(v) > 0:
                    raise ValueError(f"arms {j} and {i} overlap")
        self.center = center
        self.arm_endpoints = ends

    def arms(self) -> list[Segment]:
        return [Segment(self.center, e) for e in self.arm_endpoints]

    def points(self) -> tuple[Point, ...]:
        return (self.center,) + self.arm_endpoints

    def translate(self, t: Point) -> SegmentStar:
        return SegmentStar(self.center + t, [e + t for e in self.arm_endpoints])

    def affine_image(self, matrix, offset: Point = Point(0, 0)) -> SegmentStar:
        (a, b), (c, d) = matrix

        def f(v):
            return Point(a * v.x + b * v.y, c * v.x + d * v.y) + offset

        return SegmentStar(f(self.center), [f(e) for e in self.arm_endpoints])

    def __eq__(self, other) -> bool:
        return isinstance(other, SegmentStar) and self.center == other.center \
            and self.arm_endpoints == other.arm_endpoints

    def __hash__(self) -> int:
        return hash((self.center, self.arm_endpoints))

    def __repr__(self) -> str:
        ends = ", ".join(f"({e.x}, {e.y})" for e in self.arm_endpoints)
        return f"SegmentStar(({self.center.x}, {self.center.y}), [{ends}])"

    @property
    def denominator(self) -> int:
        return _lcm_of_denominators(self.points())


def _same_dir(u, v) -> bool:
    return u[0] * v[1] - u[1] * v[0] == 0 and u[0] * v[0] + u[1] * v[1] > 0


def _branches(c, ends, p) -> list[tuple[int, int]]:
    """Directions in which the star leaves point p."""
    out = []
    for e in ends:
        if p == c:
            out.append((e[0] - c[0], e[1] - c[1]))
        elif p == e:
            out.append((c[0] - e[0], c[1] - e[1]))
        elif _on_segment(c, e, p):
            out.append((e[0] - c[0], e[1] - c[1]))
            out.append((c[0] - e[0], c[1] - e[1]))
    return out


def _separates(walls, others) -> bool:
    """Whether directions ``others`` reach two different sectors cut out by ``walls``."""
    if len(walls) < 2:
        return False
    r = walls[0]
    seen = set()
    for u in others:
        if any(_same_dir(u, w) for w in walls):
            continue
        seen.add(sum(1 for w in walls if _ang_lt(r, w, u)))
        if len(seen) > 1:
            return True
    return False


def star_relation(S: SegmentStar, t: Point) -> tuple[bool, bool]:
    """(meets, crosses) for S against t + S.

    ``meets``: the two stars share a point.  ``crosses``: one star passes
    through the other, either as a proper crossing of two arms or at a
    contact point where the branches of one star lie in two different
    local sectors of the other.
    """
    d = math.lcm(S.denominator, t.x.denominator, t.y.denominator)
    c = _ipt(S.center, d)
    ends = [_ipt(e, d) for e in S.arm_endpoints]
    ti = _ipt(t, d)
    c2 = (c[0] + ti[0], c[1] + ti[1])
    ends2 = [(e[0] + ti[0], e[1] + ti[1]) for e in ends]
    meets = False
    for e in ends:
        for f in ends2:
            rel = _seg_rel(c, e, c2, f)
            if rel is SegmentRelation.PROPER_CROSS:
                return True, True
            if rel is not SegmentRelation.DISJOINT:
                meets = True
    if not meets:
        return False, False
    events = {p for p in [c] + ends if any(_on_segment(c2, f, p) for f in ends2)}
    events |= {p for p in [c2] + ends2 if any(_on_segment(c, e, p) for e in ends)}
    for p in events:
        b1, b2 = _branches(c, ends, p), _branches(c2, ends2, p)
        if _separates(b1, b2) or _separates(b2, b1):
            return True, True
    return True, False
