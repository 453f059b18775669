import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kisslab.convex import (
    ConvexPolygon,
    DegenerateHullError,
    NotSymmetricError,
    central_symmetral,
    convex_hull,
    difference_body,
    gauge,
    longest_chord,
    minkowski_perimeter,
    minkowski_sum,
    parallelogram_translate_witness,
    relative_distance,
)
from kisslab.geom import Point
from oracles import brute_gauge, brute_hull, brute_sum, random_convex, random_symmetric

P = lambda x, y: Point(x, y)
SQ = ConvexPolygon.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])
TRI = ConvexPolygon.from_points([(0, 0), (1, 0), (0, 1)])
HEX = ConvexPolygon.from_points([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
BIG_SQ = ConvexPolygon.from_points([(-1, -1), (1, -1), (1, 1), (-1, 1)])


def test_hull_examples():
    assert convex_hull([(0, 0), (1, 0), (0, 1)]) == TRI
    assert convex_hull(list(SQ.vertices) + [P(F(1, 2), F(1, 2))]) == SQ
    L = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
    assert convex_hull(L).vertices == (P(0, 0), P(2, 0), P(2, 1), P(1, 2), P(0, 2))
    assert set(convex_hull(L).vertices) == brute_hull(L)


def test_hull_rejects_collinear():
    with pytest.raises(DegenerateHullError):
        convex_hull([(0, 0), (1, 1), (2, 2)])


def test_sum_examples():
    assert minkowski_sum(SQ, SQ) == SQ.scale(2)
    assert difference_body(TRI) == HEX
    assert set(difference_body(TRI).vertices) == brute_sum(TRI.vertices, (-TRI).vertices)


def test_symmetral_examples():
    half = F(1, 2)
    assert central_symmetral(SQ) == ConvexPolygon.from_points([(-half, -half), (half, -half), (half, half), (-half, half)])
    assert set(central_symmetral(TRI).vertices) == {P(half, 0), P(-half, 0), P(0, half), P(0, -half),
                                                   P(half, -half), P(-half, half)}
    shifted = BIG_SQ.translate(P(3, F(1, 3)))
    assert central_symmetral(shifted) == BIG_SQ


def test_longest_chord_examples():
    c = longest_chord(SQ, P(1, 0))
    assert (c.a, c.b) == (P(0, 0), P(1, 0))
    c = longest_chord(central_symmetral(TRI), P(1, 0))
    assert c.b - c.a == P(1, 0)
    c = longest_chord(TRI, P(-1, 1))
    assert {c.a, c.b} == {P(1, 0), P(0, 1)}


def test_relative_distance_examples():
    assert relative_distance(SQ, P(0, 0), P(1, 0)) == 2
    assert relative_distance(SQ, P(3, 4), P(3, 4)) == 0
    assert relative_distance(TRI, P(0, 0), P(1, 0)) == 2
    assert gauge(central_symmetral(TRI), P(1, 0)) == 2


def test_perimeter_examples():
    assert minkowski_perimeter(BIG_SQ, BIG_SQ) == 8
    assert minkowski_perimeter(HEX, HEX) == 6
    assert minkowski_perimeter(SQ, BIG_SQ) == 4
    with pytest.raises(NotSymmetricError):
        minkowski_perimeter(SQ, TRI)


def test_parallelogram_witness_examples():
    assert parallelogram_translate_witness(SQ) == P(F(1, 2), F(1, 2))
    assert parallelogram_translate_witness(TRI) is None
    assert parallelogram_translate_witness(ConvexPolygon.from_points([(0, 0), (2, 0), (3, 1), (1, 1)])) == P(F(3, 2), F(1, 2))


def _chord_oracle(D, d):
    """Longest chord length ratio along d: max over all vertex pairs (a,b) of hull boundary lines."""
    # chords of a convex polygon parallel to d are maximal at a vertex; enumerate
    # every vertex v and intersect the line v + s d with all edges
    best = F(0)
    V = D.vertices
    for v in V:
        params = []
        for a, b in zip(V, V[1:] + V[:1]):
            e = b - a
            den = d.cross(e)
            if den == 0:
                if (a - v).cross(d) == 0:
                    params += [(a - v).dot(d) / d.dot(d), (b - v).dot(d) / d.dot(d)]
                continue
            s = (a - v).cross(e) / den
            u = (a - v).cross(d) / den
            if 0 <= u <= 1:
                params.append(s)
        best = max(best, max(params) - min(params))
    return best


@pytest.mark.parametrize("seed", range(25))
def test_hull_sum_chord_against_oracles(seed):
    rng = random.Random(seed)
    A = random_convex(rng, den=3)
    B = random_convex(rng, bound=5)
    pts = list(A.vertices) + [P(F(rng.randint(-60, 60), 3), F(rng.randint(-60, 60), 3)) for _ in range(8)]
    assert set(convex_hull(pts).vertices) == brute_hull(pts)
    S = minkowski_sum(A, B)
    assert set(S.vertices) == brute_sum(A.vertices, B.vertices)
    assert len(S.vertices) <= len(A.vertices) + len(B.vertices)
    d = P(rng.randint(-5, 5), rng.randint(1, 5))
    c = longest_chord(A, d)
    assert (c.b - c.a).cross(d) == 0
    ratio = (c.b - c.a).dot(d) / d.dot(d)
    assert abs(ratio) == _chord_oracle(A, d)
    # the chord's endpoints lie on A's boundary
    assert A.locate(c.a).name == A.locate(c.b).name == "BOUNDARY"


@pytest.mark.parametrize("seed", range(25))
def test_gauge_against_halfplane_oracle(seed):
    rng = random.Random(100 + seed)
    B = random_symmetric(rng, bound=30)
    for _ in range(10):
        v = P(F(rng.randint(-50, 50), rng.randint(1, 9)), F(rng.randint(-50, 50), rng.randint(1, 9)))
        assert gauge(B, v) == brute_gauge(B.vertices, v)


def test_chord_sum_bounded_by_perimeter():
    # chord <= arc in any norm: the C-bar distances of consecutive hull points
    # sum to at most the perimeter
    rng = random.Random(3)
    for _ in range(20):
        C = random_convex(rng, den=2)
        Cb = central_symmetral(C)
        per = minkowski_perimeter(C, Cb)
        V = C.vertices
        total = sum(gauge(Cb, b - a) for a, b in zip(V, V[1:] + V[:1]))
        assert total == per
        sub = V[::2]
        if len(sub) >= 2:
            assert sum(gauge(Cb, b - a) for a, b in zip(sub, sub[1:] + sub[:1])) <= per


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
points = st.builds(Point, rationals, rationals)


@st.composite
def convex_polygons(draw):
    return random_convex(random.Random(draw(st.integers(0, 10**6))), den=draw(st.integers(1, 4)))


@given(convex_polygons(), points, points, points)
def test_relative_distance_is_a_metric(D, p, q, r):
    d = lambda a, b: relative_distance(D, a, b)
    assert d(p, q) == d(q, p) >= 0
    assert (d(p, q) == 0) == (p == q)
    assert d(p, r) <= d(p, q) + d(q, r)


@given(convex_polygons(), points, points, points)
def test_relative_distance_translation_invariant(D, p, q, t):
    assert relative_distance(D, p + t, q + t) == relative_distance(D, p, q)


@given(convex_polygons())
def test_symmetral_is_centrally_symmetric(K):
    S = central_symmetral(K)
    assert set(S.vertices) == {-v for v in S.vertices}
    assert difference_body(K) == S.scale(2)


@given(convex_polygons(), convex_polygons())
def test_sum_vertex_bound(A, B):
    assert len(minkowski_sum(A, B).vertices) <= len(A.vertices) + len(B.vertices)


def test_chord_ties_broken_low():
    # every horizontal chord of the square has length 1; the lowest is chosen
    for d in (P(1, 0), P(-1, 0)):
        c = longest_chord(SQ, d)
        assert c.a.y == c.b.y == 0


def test_difference_body_vertices_are_vertex_differences():
    for seed in range(10):
        C = random_convex(random.Random(seed))
        diffs = {a - b for a in C.vertices for b in C.vertices}
        assert all(v * 2 in diffs for v in central_symmetral(C).vertices)
