from fractions import Fraction

import pytest

from kisslab.audit import (
    DEGENERATE,
    FAIL,
    NA,
    PASS,
    AuditPreconditionError,
    audit_theorem1,
    ccw_order,
    cyclic_order_status,
    recenter,
)
from kisslab.convex import central_symmetral, convex_hull, gauge, minkowski_perimeter
from kisslab.family import TranslateFamily, search_max_family
from kisslab.fixtures import CENTERED_SQUARE, L_SHAPE, NOTCHED_SQUARE, PLUS_SIGN, UNIT_SQUARE
from kisslab.geom import Point
from kisslab.shape import kernel_center

SQUARE_8 = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]


def test_square_eight_passes_everything():
    rep = audit_theorem1(CENTERED_SQUARE, TranslateFamily(CENTERED_SQUARE, SQUARE_8))
    assert rep.passed
    assert rep.n == 8
    assert rep.lemma1_interior == rep.lemma1_boundary == PASS
    assert len(rep.separated_subfamily) == 8
    assert rep.perimeter == 8
    assert rep.chain_bound == 35
    assert rep.maximality_note == ""


def test_one_sided_family_flags_convex_position():
    rep = audit_theorem1(CENTERED_SQUARE, TranslateFamily(CENTERED_SQUARE, [(1, 0), (1, 1)]))
    assert rep.lemma1_interior == FAIL
    assert "maximal" in rep.maximality_note
    assert rep.dist_Cbar_ok == NA and rep.perimeter is None
    assert not rep.passed


def test_preconditions():
    with pytest.raises(AuditPreconditionError):
        # the origin is a corner of the unit square, still in the kernel, but the family overlaps
        audit_theorem1(UNIT_SQUARE, TranslateFamily(UNIT_SQUARE, [(1, 0), (1, 1), (Fraction(1, 2), 1)]))
    with pytest.raises(AuditPreconditionError):
        audit_theorem1(L_SHAPE.translate(Point(-3, -3)), TranslateFamily(L_SHAPE.translate(Point(-3, -3)), [(1, 0)]))


@pytest.mark.parametrize("shape", [L_SHAPE, PLUS_SIGN, NOTCHED_SQUARE], ids=["l", "plus", "notch"])
def test_search_output_audits(shape):
    S = recenter(shape, kernel_center(shape))
    fam = search_max_family(shape).family
    rep = audit_theorem1(S, TranslateFamily(S, fam.vectors))
    assert rep.passed, rep
    assert rep.chain_bound <= 35
    assert rep.n <= rep.chain_bound
    # each chain step: separated subfamily is pairwise >= 1 apart, so its size
    # never exceeds the capacity that the perimeter allows
    assert len(rep.separated_subfamily) <= rep.separated_capacity


def test_chord_sum_within_perimeter_on_audited_families():
    for shape in (L_SHAPE, PLUS_SIGN, CENTERED_SQUARE):
        S = recenter(shape, kernel_center(shape))
        X = search_max_family(S).family.vectors
        C = convex_hull(X)
        Cb = central_symmetral(C)
        ring = [X[i] for i in ccw_order(X)]
        chords = sum(gauge(Cb, b - a) for a, b in zip(ring, ring[1:] + ring[:1]))
        assert chords <= minkowski_perimeter(C, Cb) <= 8


def test_cyclic_order_status():
    P = Point
    assert cyclic_order_status([P(1, 0), P(0, 1), P(-1, 0), P(0, -1)]) == PASS
    assert cyclic_order_status([P(0, 1), P(-1, 0), P(0, -1), P(1, 0)]) == PASS
    assert cyclic_order_status([P(1, 0), P(-1, 0), P(0, 1), P(0, -1)]) == FAIL
    assert cyclic_order_status([P(1, 0), P(2, 0), P(0, 1)]) == DEGENERATE
    assert cyclic_order_status([P(0, 0), P(1, 0)]) == DEGENERATE
