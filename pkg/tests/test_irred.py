from __future__ import annotations

import numpy as np
import pytest

from oracles import brute_decomposable, small_polygons
from tuttelab.errors import NotBrylawski, RankOutOfRange, ZeroPolynomial
from tuttelab.irred import (
    NewtonPolygon,
    convex_hull,
    criterion_A,
    criterion_B,
    irreducibility_verdict,
    modp_irreducibility_certificate,
    newton_polygon,
    polygon_indecomposable,
    univariate_factor_scan,
)
from tuttelab.polycore import BiPoly, parse_bi
from tuttelab.rankedset import (
    Graph,
    corank_nullity,
    cycle_tutte,
    gordon_greedoid,
    graphic_rank,
    offset_rank_example,
    random_rank_function,
    three_valued_example,
    two_valued_example,
    uniform_tutte,
)

FIVE = "x^3 + 2*x^2 + y^2 + 3*x*y"


@pytest.fixture
def rng():
    return np.random.default_rng(5)


# --- factor scan and coefficient criteria ----------------------------------

def test_univariate_factor_scan():
    assert univariate_factor_scan(parse_bi("x*y")) == {"x", "y"}
    assert univariate_factor_scan(corank_nullity(gordon_greedoid())) == {"x"}
    with pytest.raises(NotBrylawski):
        univariate_factor_scan(parse_bi("x + 2"))


def test_scan_never_finds_shifted_factors_on_ranked_sets(rng):
    for _ in range(100):
        T = corank_nullity(random_rank_function(int(rng.integers(0, 8)), rng))
        assert not {"x-1", "y-1"} & univariate_factor_scan(T)


def test_criterion_A_examples():
    assert criterion_A(cycle_tutte(4)).is_irreducible
    v = criterion_A(parse_bi(FIVE))
    assert v.verdict == "Inconclusive" and not v.checks["t10_nonzero"]
    assert criterion_A(parse_bi("x*y")).verdict == "Inconclusive"
    with pytest.raises(RankOutOfRange):
        criterion_A(parse_bi("x"))
    with pytest.raises(NotBrylawski):
        criterion_A(parse_bi("x + 2"))


def test_criterion_B_examples():
    v = criterion_B(parse_bi(FIVE))
    assert v.is_irreducible and v.checks["degree_sum_equals_n"]
    assert criterion_B(cycle_tutte(4)).verdict == "Inconclusive"
    assert criterion_B(parse_bi("x^2*y + x*y^2")).verdict == "Inconclusive"


def test_criteria_never_say_reducible(rng):
    for _ in range(100):
        T = corank_nullity(random_rank_function(int(rng.integers(2, 8)), rng))
        for crit in (criterion_A, criterion_B):
            try:
                assert crit(T).verdict in ("Irreducible", "Inconclusive")
            except RankOutOfRange:
                pass


def _connected_graphs(rng, count):
    out = []
    while len(out) < count:
        V = int(rng.integers(2, 6))
        m = int(rng.integers(2, 10))
        edges = tuple((int(rng.integers(0, V)), int(rng.integers(0, V))) for _ in range(m))
        T = corank_nullity(graphic_rank(Graph(V, edges)))
        if T.coeff(1, 0) != 0:
            out.append(T)
    return out


def test_criterion_A_on_connected_matroids(rng):
    for T in _connected_graphs(rng, 60):
        assert criterion_A(T).is_irreducible
    for b in range(3, 10):
        for a in range(1, b):
            assert criterion_A(uniform_tutte(a, b)).is_irreducible


# --- Newton polygons -----------------------------------------------------------

def _cyclic_equal(a, b):
    return len(a) == len(b) and any(tuple(a[k:] + a[:k]) == tuple(b) for k in range(len(a)))


def test_newton_polygon_examples():
    for n in range(2, 9):
        for r in range(1, n + 1):
            T = two_valued_example(n, r)[1].shift(1, 1)
            poly = newton_polygon(T)
            expect = [(0, n - r), (r, 0), (r, n - 1)] if n - r > 0 else [(0, 0), (r, 0), (r, n - 1)]
            assert set(poly.vertices) == set(expect)
    assert newton_polygon(parse_bi("5*x^2*y^3")).vertices == ((2, 3),)
    for n in range(3, 9):
        T = three_valued_example(n)[1].shift(1, 1)
        assert set(newton_polygon(T).vertices) == {(n, 0), (0, 0), (n - 1, n - 2)}
    with pytest.raises(ZeroPolynomial):
        newton_polygon(BiPoly())


def test_hull_is_counterclockwise_and_strict():
    pts = [(0, 0), (2, 0), (4, 0), (4, 2), (2, 2), (0, 4), (1, 1)]
    hull = convex_hull(pts)
    assert _cyclic_equal(list(hull), [(0, 0), (4, 0), (4, 2), (0, 4)])
    assert sum(e[0] for e in NewtonPolygon(hull).edges()) == 0


def test_indecomposable_examples():
    assert not polygon_indecomposable(NewtonPolygon(((0, 0), (2, 0), (2, 2), (0, 2))))
    assert not polygon_indecomposable(NewtonPolygon(((0, 0), (2, 0))))
    assert polygon_indecomposable(NewtonPolygon(((0, 0), (1, 0))))
    # the unit square is the sum of two unit segments
    unit = ((0, 0), (1, 0), (1, 1), (0, 1))
    assert not polygon_indecomposable(NewtonPolygon(unit))
    assert brute_decomposable(list(unit))
    assert polygon_indecomposable(NewtonPolygon(((3, 4),)))


def test_example_polygons_indecomposable():
    for n in range(1, 11):
        for r in range(1, n + 1):
            assert polygon_indecomposable(newton_polygon(two_valued_example(n, r)[1].shift(1, 1)))
    for n in [1] + list(range(3, 11)):
        assert polygon_indecomposable(newton_polygon(three_valued_example(n)[1].shift(1, 1)))
    # n = 2 gives x^2, a doubled segment
    assert three_valued_example(2)[1] == parse_bi("x^2")
    assert not polygon_indecomposable(newton_polygon(three_valued_example(2)[1].shift(1, 1)))


def test_indecomposable_matches_brute_force():
    polys = small_polygons()
    assert len(polys) > 400
    for p in polys:
        assert polygon_indecomposable(NewtonPolygon(convex_hull(p))) == (not brute_decomposable(list(p))), p


# --- mod p certificate and the combined verdict -----------------------------------

def test_modp_certificate_examples():
    v = modp_irreducibility_certificate(cycle_tutte(4))
    assert v.is_irreducible and v.method == "ModPSpecialization"
    assert modp_irreducibility_certificate(parse_bi("x^2 - y^2")).verdict == "Inconclusive"
    assert modp_irreducibility_certificate(three_valued_example(6)[1]).is_irreducible


def test_modp_detects_content():
    T = parse_bi("(y + 1)*(x^3 + x + y)")
    v = modp_irreducibility_certificate(T)
    assert v.is_reducible
    assert v.witness[0] == parse_bi("y + 1")


def test_verdict_examples():
    v = irreducibility_verdict(two_valued_example(5, 3)[1])
    assert v.is_irreducible and v.method == "NewtonPolygon"
    v = irreducibility_verdict(corank_nullity(gordon_greedoid()))
    assert v.is_reducible and v.witness[0] == parse_bi("x")
    assert irreducibility_verdict(uniform_tutte(2, 4)).method == "CriterionA"
    assert irreducibility_verdict(parse_bi(FIVE)).method == "CriterionB"


def test_offset_family_needs_polygon():
    for n, a, b in [(5, 2, 1), (6, 3, 1), (7, 3, 2), (8, 4, 3)]:
        _, T = offset_rank_example(n, a, b)
        v = criterion_A(T)
        assert not v.checks["degree_sum_at_most_n_plus_1"]
        poly = newton_polygon(T.shift(1, 1))
        assert polygon_indecomposable(poly)
        assert irreducibility_verdict(T).is_irreducible


def _random_factor(rng):
    while True:
        terms = {(int(rng.integers(0, 3)), int(rng.integers(0, 3))): int(rng.integers(-4, 5)) for _ in range(3)}
        f = BiPoly(terms)
        if f.deg_x + f.deg_y >= 1:
            return f


def test_soundness_on_products(rng):
    for _ in range(150):
        U, V = _random_factor(rng), _random_factor(rng)
        v = irreducibility_verdict(U * V, t_range=4, p_range=40)
        assert not v.is_irreducible
        if v.is_reducible:
            prod = BiPoly.const(1)
            for f in v.witness:
                prod = prod * f
            assert prod == U * V


def test_soundness_on_connected_matroids(rng):
    for T in _connected_graphs(rng, 60):
        assert not irreducibility_verdict(T).is_reducible
