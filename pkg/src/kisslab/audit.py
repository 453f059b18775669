"""Step-by-step check of the starlike bound chain on a concrete family.

Given a starlike polygon S (with the origin in its kernel) and a validated
family of touching translates, every intermediate claim of the argument
bounding the family size by 35 is recomputed with exact arithmetic:

* the origin is interior to C = conv X and X lies on the boundary of C;
* contact witnesses w_i appear around o in the same cyclic order as the x_i;
* int K_i holds at most one other translation vector (K_i = x_i + conv S);
* a large pairwise separated subfamily X' exists, |X'| >= floor((n-2)/2);
* X lies in the difference body K - K;
* dist_K(u, v) >= 1 and dist_C(u, v) = dist_Cbar(u, v) >= 1/2 on X';
* the perimeter of C in the norm of Cbar = (C - C)/2 is at most 8.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .cliques import max_independent_set
from .convex import (
    ConvexPolygon,
    DegenerateHullError,
    central_symmetral,
    convex_hull,
    difference_body,
    minkowski_perimeter,
    relative_distance,
)
from .family import TranslateFamily, validate_family
from .geom import ORIGIN, Location, Point, SimplePolygon, _ang_lt, touch_witness
from .shape import is_starlike_at

PASS, FAIL, DEGENERATE, NA = "pass", "fail", "degenerate", "n/a"


class AuditPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class AuditReport:
    n: int
    lemma1_interior: str
    lemma1_boundary: str
    ccw_witnesses: str
    bezdek: str
    bezdek_offenders: tuple[tuple[int, tuple[int, ...]], ...]
    separated_subfamily: tuple[int, ...]
    separated_size_ok: str
    containment: str
    dist_K_ok: str
    dist_Cbar_ok: str
    perimeter: Fraction | None
    perimeter_ok: str
    separated_capacity: int
    chain_bound: int
    witnesses: tuple[Point, ...] = field(default=())
    maximality_note: str = ""

    @property
    def passed(self) -> bool:
        checks = (self.lemma1_interior, self.lemma1_boundary, self.bezdek, self.separated_size_ok,
                  self.containment, self.dist_K_ok, self.dist_Cbar_ok, self.perimeter_ok)
        return all(c == PASS for c in checks) and self.ccw_witnesses in (PASS, DEGENERATE)


def _ipt1(p: Point, d: int):
    return (p.x.numerator * (d // p.x.denominator), p.y.numerator * (d // p.y.denominator))


def _angle_cmp(a: Point, b: Point) -> int:
    # counterclockwise angle from the positive x-axis, exact
    r = (1, 0)
    d = math.lcm(a.x.denominator, a.y.denominator, b.x.denominator, b.y.denominator)
    ia, ib = _ipt1(a, d), _ipt1(b, d)
    if _ang_lt(r, ia, ib):
        return -1
    if _ang_lt(r, ib, ia):
        return 1
    return 0


def ccw_order(points: Sequence[Point]) -> list[int]:
    """Indices sorted by angle around the origin, ties by distance."""
    def cmp(i, j):
        c = _angle_cmp(points[i], points[j])
        if c:
            return c
        di, dj = points[i].dot(points[i]), points[j].dot(points[j])
        return (di > dj) - (di < dj)
    return sorted(range(len(points)), key=cmp_to_key(cmp))


def cyclic_order_status(points: Sequence[Point]) -> str:
    """Whether ``points`` (in the given order) wind once counterclockwise around o.

    pass: strictly increasing angles up to rotation; degenerate: the order
    holds only weakly (a point at o or two points on one ray); fail otherwise.
    """
    n = len(points)
    if any(p == ORIGIN for p in points):
        return DEGENERATE
    if n < 2:
        return PASS
    descents = ties = 0
    for i in range(n):
        c = _angle_cmp(points[i], points[(i + 1) % n])
        if c > 0:
            descents += 1
        elif c == 0:
            ties += 1
    if ties == n:
        return DEGENERATE
    if descents > 1:
        return FAIL
    return DEGENERATE if ties else PASS


def separated(S_hull: ConvexPolygon, u: Point, v: Point) -> bool:
    """u not in int(v + conv S) and v not in int(u + conv S)."""
    return (S_hull.locate(u - v) is not Location.INTERIOR
            and S_hull.locate(v - u) is not Location.INTERIOR)


def extract_separated_subfamily(F: TranslateFamily) -> list[int]:
    """Indices of a maximum pairwise separated subfamily (exact)."""
    K = convex_hull(F.base.vertices)
    X = F.vectors
    n = len(X)
    conflicts = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if not separated(K, X[i], X[j]):
                conflicts[i] |= 1 << j
                conflicts[j] |= 1 << i
    idx, _ = max_independent_set(conflicts)
    return idx


def _ok(flag: bool) -> str:
    return PASS if flag else FAIL


def audit_theorem1(S: SimplePolygon, F: TranslateFamily) -> AuditReport:
    """Audit every step of the bound chain for ``F`` over the starlike base ``S``."""
    if not is_starlike_at(S, ORIGIN):
        raise AuditPreconditionError("the origin is not in the star kernel of the base")
    if F.base != S:
        raise AuditPreconditionError("family base differs from the audited shape")
    report = validate_family(F)
    if not report.valid:
        raise AuditPreconditionError(f"family does not validate: {report.violations}")

    X = list(F.vectors)
    n = len(X)
    K = convex_hull(S.vertices)
    try:
        C = convex_hull(X)
    except DegenerateHullError:
        C = None

    if C is not None:
        interior = C.locate(ORIGIN) is Location.INTERIOR
        boundary = all(C.locate(x) is Location.BOUNDARY for x in X)
    else:
        interior = False
        boundary = True  # a segment or point is all boundary
    lemma1_interior, lemma1_boundary = _ok(interior), _ok(boundary)

    witnesses = tuple(touch_witness(S, S.translate(x)) for x in X)
    order = ccw_order(X)
    if any(_angle_cmp(X[a], X[b]) == 0 for a, b in zip(order, order[1:])):
        ccw = DEGENERATE
    else:
        ccw = cyclic_order_status([witnesses[i] for i in order])

    offenders = []
    for i, x in enumerate(X):
        inside = tuple(j for j, y in enumerate(X) if j != i and K.locate(y - x) is Location.INTERIOR)
        if len(inside) > 1:
            offenders.append((i, inside))
    bezdek = _ok(not offenders)

    sub = extract_separated_subfamily(F)
    size_ok = _ok(len(sub) >= (n - 2) // 2)

    diff = difference_body(K)
    containment = _ok(all(diff.contains(x) for x in X))

    pairs = [(X[a], X[b]) for k, a in enumerate(sub) for b in sub[k + 1:]]
    dist_k = _ok(all(relative_distance(K, u, v) >= 1 for u, v in pairs))

    if C is not None:
        Cbar = central_symmetral(C)
        dist_c = _ok(all(relative_distance(Cbar, u, v) == relative_distance(C, u, v) >= Fraction(1, 2)
                         for u, v in pairs))
        perimeter = minkowski_perimeter(C, Cbar)
        perimeter_ok = _ok(perimeter <= 8)
        # points on bd C pairwise >= 1/2 apart: at most 2 * perimeter of them
        capacity = min(int(2 * perimeter), 16)
    else:
        dist_c = NA
        perimeter, perimeter_ok, capacity = None, NA, 16
    chain_bound = 2 * capacity + 3

    note = ""
    if lemma1_interior == FAIL or lemma1_boundary == FAIL:
        note = (f"convex-position checks presume a family of maximum size; this family has n={n} "
                "and may not be maximal, so the failure is not a counterexample")
    return AuditReport(
        n=n,
        lemma1_interior=lemma1_interior,
        lemma1_boundary=lemma1_boundary,
        ccw_witnesses=ccw,
        bezdek=bezdek,
        bezdek_offenders=tuple(offenders),
        separated_subfamily=tuple(sub),
        separated_size_ok=size_ok,
        containment=containment,
        dist_K_ok=dist_k,
        dist_Cbar_ok=dist_c,
        perimeter=perimeter,
        perimeter_ok=perimeter_ok,
        separated_capacity=capacity,
        chain_bound=chain_bound,
        witnesses=witnesses,
        maximality_note=note,
    )


def recenter(S: SimplePolygon, center: Point) -> SimplePolygon:
    return S.translate(-center)
