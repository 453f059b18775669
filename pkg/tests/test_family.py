import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kisslab.audit import extract_separated_subfamily
from kisslab.convex import ConvexPolygon, difference_body
from kisslab.family import (
    DuplicateVectorError,
    SearchParams,
    TranslateFamily,
    ViolationKind,
    search_max_family,
    validate,
    validate_family,
    validate_segment_star_family,
)
from kisslab.fixtures import (
    AFFINE_REGULAR_HEXAGON,
    CENTERED_SQUARE,
    L_SHAPE,
    PLUS_STAR,
    TRIANGLE,
    TRIPOD_STAR,
    UNIT_SQUARE,
)
from kisslab.geom import Location, Point
from oracles import random_affine

SQUARE_8 = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
# (2,-1) - (1,-2) = (1,1) lies inside conv L, so only two of the three are separated
L_NESTED_3 = [(-2, -1), (1, -2), (2, -1)]


def kinds(report):
    return {v.kind for v in report.violations}


def test_square_eight_is_valid():
    rep = validate_family(TranslateFamily(UNIT_SQUARE, SQUARE_8))
    assert rep.valid


def test_overlapping_member_detected():
    rep = validate_family(TranslateFamily(UNIT_SQUARE, SQUARE_8 + [(F(1, 2), 1)]))
    assert ViolationKind.PAIR_OVERLAP in kinds(rep)
    bad = {(v.i, v.j) for v in rep.violations if v.kind is ViolationKind.PAIR_OVERLAP}
    assert (2, 8) in bad and (4, 8) in bad


def test_not_touching_and_duplicates():
    rep = validate_family(TranslateFamily(UNIT_SQUARE, [(3, 0)]))
    assert kinds(rep) == {ViolationKind.NOT_TOUCHING}
    with pytest.raises(DuplicateVectorError):
        TranslateFamily(UNIT_SQUARE, [(1, 0), (1, 0)])


def test_segment_star_examples():
    assert validate_segment_star_family(TranslateFamily(PLUS_STAR, [(2, 0)])).valid
    assert kinds(validate(TranslateFamily(PLUS_STAR, [(2, 2)]))) == {ViolationKind.NO_CONTACT}
    assert ViolationKind.CROSSES_BASE in kinds(validate(TranslateFamily(PLUS_STAR, [(F(1, 2), F(1, 2))])))


def test_star_center_on_arm_crosses():
    # the translate's center sits on the base's horizontal arm with arms on both sides
    assert ViolationKind.CROSSES_BASE in kinds(validate(TranslateFamily(PLUS_STAR, [(F(1, 2), 0)])))
    # T-junctions only: the translate's left arm ends on the base's vertical arm and
    # the base's right arm ends on the translate's vertical arm
    assert validate(TranslateFamily(PLUS_STAR, [(1, F(1, 2))])).valid


@pytest.mark.parametrize("base,size", [(UNIT_SQUARE, 8), (TRIANGLE, 6), (L_SHAPE, 6), (AFFINE_REGULAR_HEXAGON, 6)])
def test_search_examples(base, size):
    res = search_max_family(base)
    assert len(res.family) == size
    assert validate(res.family).valid


def test_star_search_is_sound():
    for star in (PLUS_STAR, TRIPOD_STAR):
        res = search_max_family(star, SearchParams(samples_per_family=4))
        assert validate(res.family).valid
        assert len(res.family) >= 2


def test_separated_subfamily_examples():
    sq = TranslateFamily(CENTERED_SQUARE, SQUARE_8)
    assert extract_separated_subfamily(sq) == list(range(8))
    assert extract_separated_subfamily(TranslateFamily(CENTERED_SQUARE, [(1, 0)])) == [0]
    nested = TranslateFamily(L_SHAPE, L_NESTED_3)
    assert validate(nested).valid
    assert len(extract_separated_subfamily(nested)) == 2


@given(st.integers(0, 10**6))
@settings(max_examples=25)
def test_removing_members_keeps_validity(seed):
    rng = random.Random(seed)
    X = rng.sample(SQUARE_8, rng.randint(1, 8))
    assert validate(TranslateFamily(UNIT_SQUARE, X)).valid
    drop = rng.randrange(len(X))
    assert validate(TranslateFamily(UNIT_SQUARE, X[:drop] + X[drop + 1:])).valid


@given(st.integers(0, 10**6))
@settings(max_examples=25)
def test_validation_translation_invariant(seed):
    rng = random.Random(seed)
    t = Point(F(rng.randint(-20, 20), 3), F(rng.randint(-20, 20), 7))
    X = SQUARE_8 + [(F(rng.randint(-8, 8), 4), F(rng.randint(-8, 8), 4))]
    X = list(dict.fromkeys(X))
    X = [x for x in X if x != (0, 0)]
    a = validate(TranslateFamily(L_SHAPE, X))
    b = validate(TranslateFamily(L_SHAPE.translate(t), X))
    assert a == b


@given(st.integers(0, 10**6))
@settings(max_examples=20)
def test_validity_affine_equivariant(seed):
    m, t = random_affine(random.Random(seed))
    fam = TranslateFamily(L_SHAPE, L_NESTED_3)
    lin = [[m[0][0], m[0][1]], [m[1][0], m[1][1]]]
    img = lambda v: Point(lin[0][0] * v.x + lin[0][1] * v.y, lin[1][0] * v.x + lin[1][1] * v.y)
    fam2 = TranslateFamily(L_SHAPE.affine_image(m, t), [img(x) for x in fam.vectors])
    assert validate(fam2).valid == validate(fam).valid
    sq = TranslateFamily(UNIT_SQUARE.affine_image(m, t), [img(Point(*x)) for x in SQUARE_8])
    assert validate(sq).valid


@pytest.mark.parametrize("base", [UNIT_SQUARE, TRIANGLE, AFFINE_REGULAR_HEXAGON], ids=["square", "triangle", "hexagon"])
def test_convex_family_on_difference_body_boundary(base):
    D = difference_body(ConvexPolygon(base.vertices))
    fam = search_max_family(base).family
    assert all(D.locate(x) is Location.BOUNDARY for x in fam.vectors)
