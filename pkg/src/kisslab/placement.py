"""Translation vectors that put a copy of a shape in contact with the original."""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .convex import ConvexPolygon, convex_hull, difference_body
from .geom import (
    ORIGIN,
    Location,
    Point,
    Relation,
    Segment,
    SimplePolygon,
    _ipt,
    _locate,
    _relate_int,
)
from .shape import pockets
from .star import SegmentStar, star_relation

DEFAULT_SAMPLES = 16


class ContactKind(enum.Enum):
    VERTEX_ON_EDGE = "VertexOnEdge"
    EDGE_ON_VERTEX = "EdgeOnVertex"


@dataclass(frozen=True)
class ContactFamily:
    """Translations placing a moving feature of x+J on a fixed feature of J."""

    kind: ContactKind
    moving_feature: int
    fixed_feature: int
    parameter_segment: Segment

    def sample(self, samples: int) -> list[Point]:
        a, b = self.parameter_segment.a, self.parameter_segment.b
        return [a + (b - a) * Fraction(k, samples) for k in range(samples + 1)]


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("KISSLAB_THREADS", "1")))
    except ValueError:
        return 1


class PlacementOracle:
    """Memoized relation between a base shape and its translates.

    relation(x) classifies ``x + base`` against ``base``.  The answer for -x
    equals the answer for x, so results are stored once per +-pair.  For
    polygons a vector outside the interior of the hull difference body can
    never overlap; ``compatible`` uses that before the full test.
    """

    def __init__(self, base: SimplePolygon | SegmentStar):
        self.base = base
        self._cache: dict[Point, Relation] = {}
        if isinstance(base, SimplePolygon):
            self._diff = difference_body(convex_hull(base.vertices))
            self._scale = base.denominator
            self._diff_scale = math.lcm(*(math.lcm(v.x.denominator, v.y.denominator) for v in self._diff))
        else:
            self._diff = None

    def _key(self, x: Point) -> Point:
        return x if (x.x, x.y) >= (-x.x, -x.y) else -x

    def relation(self, x: Point) -> Relation:
        k = self._key(x)
        rel = self._cache.get(k)
        if rel is None:
            rel = _relation_uncached(self.base, k)
            self._cache[k] = rel
        return rel

    def compatible(self, x: Point) -> bool:
        """Whether base and x + base may coexist in a family (no overlap / no crossing)."""
        if self._diff is not None:
            k = self._key(x)
            if k in self._cache:
                return self._cache[k] is not Relation.OVERLAP
            d = math.lcm(self._diff_scale, x.x.denominator, x.y.denominator)
            loc, _ = _locate(_ipt(x, d), [_ipt(v, d) for v in self._diff.vertices])
            if loc is not Location.INTERIOR:
                return True
        return self.relation(x) is not Relation.OVERLAP

    def prime(self, relations: dict[Point, Relation]) -> None:
        for x, rel in relations.items():
            self._cache[self._key(x)] = rel


def _relation_uncached(base, x: Point) -> Relation:
    if isinstance(base, SegmentStar):
        meets, crosses = star_relation(base, x)
        if crosses:
            return Relation.OVERLAP
        return Relation.TOUCH if meets else Relation.DISJOINT
    d = math.lcm(base.denominator, x.x.denominator, x.y.denominator)
    P = base.int_coords(d)
    t = _ipt(x, d)
    Q = [(p[0] + t[0], p[1] + t[1]) for p in P]
    return _relate_int(P, Q)[0]


def placement_relation(J: SimplePolygon | SegmentStar, x: Point) -> Relation:
    """Relation of x + J against J.

    For a segment star, Overlap stands for a proper crossing of arms and
    Touch for contact without crossing.
    """
    return _relation_uncached(J, x)


def _features(J):
    if isinstance(J, SegmentStar):
        return list(J.points()), J.arms()
    return list(J.vertices), J.edges()


def contact_families(J: SimplePolygon | SegmentStar) -> list[ContactFamily]:
    verts, edges = _features(J)
    fams = []
    for i, v in enumerate(verts):
        for j, e in enumerate(edges):
            fams.append(ContactFamily(ContactKind.VERTEX_ON_EDGE, i, j, Segment(e.a - v, e.b - v)))
    for i, e in enumerate(edges):
        for j, v in enumerate(verts):
            fams.append(ContactFamily(ContactKind.EDGE_ON_VERTEX, i, j, Segment(v - e.b, v - e.a)))
    return fams


def _classify_chunk(args):
    base, xs = args
    return [_relation_uncached(base, x) for x in xs]


def classify_placements(J, xs: Sequence[Point], threads: int = 1) -> list[Relation]:
    """Relations for many vectors, optionally fanned out to worker processes."""
    if threads <= 1 or len(xs) < 256:
        return [_relation_uncached(J, x) for x in xs]
    size = math.ceil(len(xs) / threads)
    chunks = [(J, list(xs[i:i + size])) for i in range(0, len(xs), size)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(_classify_chunk, chunks))
    return [r for part in parts for r in part]


def _candidates(J, samples: int) -> list[Point]:
    if samples < 1:
        raise ValueError("samples_per_family must be >= 1")
    out: set[Point] = set()
    if isinstance(J, SimplePolygon) and pockets(J).count == 0:
        D = difference_body(convex_hull(J.vertices))
        for e in D.edges():
            out.update(e.a + (e.b - e.a) * Fraction(k, samples) for k in range(samples + 1))
    else:
        for fam in contact_families(J):
            out.update(fam.sample(samples))
    out.discard(ORIGIN)
    return sorted(out)


def touching_placements(J: SimplePolygon | SegmentStar, samples_per_family: int = DEFAULT_SAMPLES,
                        threads: int | None = None, oracle: PlacementOracle | None = None) -> list[Point]:
    """Sampled translation vectors x with x + J touching J, sorted.

    Convex J: points of the difference-body boundary (vertices plus evenly
    spaced edge samples).  Otherwise: samples of every contact family.
    Every returned vector has been checked to touch.
    """
    threads = default_threads() if threads is None else threads
    cands = _candidates(J, samples_per_family)
    rels = classify_placements(J, cands, threads)
    if oracle is not None:
        oracle.prime(dict(zip(cands, rels)))
    return [x for x, r in zip(cands, rels) if r is Relation.TOUCH]
