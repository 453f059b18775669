"""Translate families: validation against the touching rules and maximal-family search."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence, Union

from .cliques import max_clique
from .geom import ORIGIN, Point, Relation, SimplePolygon
from .placement import DEFAULT_SAMPLES, PlacementOracle, default_threads, touching_placements
from .shape import hadwiger_bounds
from .star import SegmentStar, star_relation

Base = Union[SimplePolygon, SegmentStar]


class DuplicateVectorError(ValueError):
    pass


class ViolationKind(str, enum.Enum):
    NOT_TOUCHING = "NotTouching"
    PAIR_OVERLAP = "PairOverlap"
    CROSSES_BASE = "CrossesBase"
    CROSSES_PEER = "CrossesPeer"
    NO_CONTACT = "NoContact"


@dataclass(frozen=True)
class Violation:
    i: int
    j: int | None
    kind: ViolationKind


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class TranslateFamily:
    """A base shape together with the translation vectors of its copies."""

    base: Base
    vectors: tuple[Point, ...] = field(default_factory=tuple)

    def __post_init__(self):
        vs = tuple(v if isinstance(v, Point) else Point(*v) for v in self.vectors)
        object.__setattr__(self, "vectors", vs)
        if len(set(vs)) != len(vs):
            raise DuplicateVectorError("translation vectors must be distinct")
        if ORIGIN in vs:
            raise ValueError("the zero vector is not a translate")

    def __len__(self) -> int:
        return len(self.vectors)

    def members(self) -> list[Base]:
        return [self.base.translate(x) for x in self.vectors]


def validate_family(F: TranslateFamily, oracle: PlacementOracle | None = None) -> ValidationReport:
    if not isinstance(F.base, SimplePolygon):
        raise TypeError("validate_family needs a polygon base")
    oracle = oracle or PlacementOracle(F.base)
    out = []
    X = F.vectors
    for i, x in enumerate(X):
        if oracle.relation(x) is not Relation.TOUCH:
            out.append(Violation(i, None, ViolationKind.NOT_TOUCHING))
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            if oracle.relation(X[j] - X[i]) is Relation.OVERLAP:
                out.append(Violation(i, j, ViolationKind.PAIR_OVERLAP))
    return ValidationReport(tuple(out))


def validate_segment_star_family(F: TranslateFamily) -> ValidationReport:
    S = F.base
    if not isinstance(S, SegmentStar):
        raise TypeError("validate_segment_star_family needs a segment-star base")
    out = []
    X = F.vectors
    for i, x in enumerate(X):
        meets, crosses = star_relation(S, x)
        if not meets:
            out.append(Violation(i, None, ViolationKind.NO_CONTACT))
        if crosses:
            out.append(Violation(i, None, ViolationKind.CROSSES_BASE))
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            if star_relation(S, X[j] - X[i])[1]:
                out.append(Violation(i, j, ViolationKind.CROSSES_PEER))
    return ValidationReport(tuple(out))


def validate(F: TranslateFamily) -> ValidationReport:
    if isinstance(F.base, SegmentStar):
        return validate_segment_star_family(F)
    return validate_family(F)


@dataclass(frozen=True)
class SearchParams:
    samples_per_family: int = DEFAULT_SAMPLES
    beam_width: int = 64
    max_backtrack_nodes: int = 200_000
    seed: int = 0
    threads: int | None = None


@dataclass(frozen=True)
class SearchResult:
    family: TranslateFamily
    candidates: int
    exhaustive: bool  # maximum over the sampled candidates, not a cut-off search


def compatibility_graph(X: Sequence[Point], oracle: PlacementOracle) -> list[int]:
    n = len(X)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if oracle.compatible(X[j] - X[i]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def search_max_family(base: Base, params: SearchParams = SearchParams()) -> SearchResult:
    """Largest family of pairwise compatible touching placements found.

    Candidates are sampled touching placements; the family is a maximum
    clique of the compatibility graph under the search caps.  When the
    classifier knows an exact upper bound the search stops on reaching it.
    The result is always re-validated.
    """
    threads = default_threads() if params.threads is None else params.threads
    oracle = PlacementOracle(base)
    X = touching_placements(base, params.samples_per_family, threads=threads, oracle=oracle)
    adj = compatibility_graph(X, oracle)
    target = hadwiger_bounds(base).upper if isinstance(base, SimplePolygon) else None
    idx, complete = max_clique(adj, beam_width=params.beam_width, max_nodes=params.max_backtrack_nodes,
                               target=target, seed=params.seed)
    family = TranslateFamily(base, tuple(sorted(X[i] for i in idx)))
    report = validate_family(family, oracle) if isinstance(base, SimplePolygon) else validate_segment_star_family(family)
    if not report.valid:
        raise AssertionError(f"search produced an invalid family: {report.violations}")
    return SearchResult(family, len(X), complete)
