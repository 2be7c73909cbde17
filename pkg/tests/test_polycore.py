from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    full_factorization_mod_p,
    mul_mod_p,
    sylvester_discriminant,
    sylvester_resultant,
)
from tuttelab.errors import (
    ConstantPolynomial,
    DivisionInexact,
    HyperbolaVanishing,
    NotPrime,
    ZeroPolynomial,
)
from tuttelab.polycore import (
    BiPoly,
    FactorPattern,
    ModPoly,
    UniPoly,
    discriminant,
    discriminant_x,
    factor_pattern,
    format_bi,
    hyperbola_substitute,
    is_squarefree_mod,
    parse_bi,
    reduce_mod,
    resultant,
    resultant_x,
    specialize_y,
    uni_gcd,
)

coeff = st.integers(-9, 9)


def nonzero_uni(max_deg=6):
    return st.lists(coeff, min_size=1, max_size=max_deg + 1).filter(lambda c: c[-1] != 0).map(UniPoly)


bipolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-20, 20), max_size=8
).map(BiPoly)


# --- arithmetic basics ----------------------------------------------------

def test_bipoly_canonical_form():
    p = BiPoly({(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert p == BiPoly({(1, 0): 2})
    assert BiPoly().deg_x == -1 and BiPoly().deg_y == -1
    assert parse_bi("x^2*y + 3*y^4").deg_y == 4


@given(bipolys)
def test_text_roundtrip(p):
    assert parse_bi(format_bi(p)) == p


@given(bipolys)
def test_json_roundtrip(p):
    assert BiPoly.from_json(p.to_json()) == p


@given(nonzero_uni())
def test_uni_json_roundtrip(f):
    assert UniPoly.from_json(f.to_json()) == f


def test_json_terms_descending_with_string_coefficients():
    data = parse_bi("x^3 + x^2 + x + y").to_json()
    assert data == {"terms": [{"i": 3, "j": 0, "c": "1"}, {"i": 2, "j": 0, "c": "1"},
                              {"i": 1, "j": 0, "c": "1"}, {"i": 0, "j": 1, "c": "1"}]}
    big = BiPoly({(0, 0): 10**40})
    assert BiPoly.from_json(big.to_json()).coeff(0, 0) == 10**40


@given(bipolys, bipolys)
def test_exact_division_recovers_factor(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a


def test_exact_division_inexact():
    with pytest.raises(DivisionInexact):
        parse_bi("x^2 + y").exact_div(parse_bi("x - 1"))


@given(bipolys, st.integers(-3, 3), st.integers(-3, 3))
def test_shift_evaluates_consistently(p, a, b):
    q = p.shift(a, b)
    for x0, y0 in [(0, 0), (2, -1), (-3, 5)]:
        assert q(x0, y0) == p(x0 + a, y0 + b)


def test_uni_gcd():
    f = UniPoly([-1, 1]) * UniPoly([2, 0, 3])
    g = UniPoly([-1, 1]) * UniPoly([5, 7])
    assert uni_gcd(f * 4, g * 6) == UniPoly([-1, 1]) * 2
    assert uni_gcd(UniPoly([1, 1]), UniPoly([2, 1])) == UniPoly([1])


# --- resultants and discriminants ------------------------------------------

def test_resultant_examples():
    assert resultant(UniPoly([-2, 1]), UniPoly([-3, 1])) == sylvester_resultant([-2, 1], [-3, 1]) == -1
    assert resultant(UniPoly([3, 1, 4, 1, 5]), UniPoly([1])) == 1
    f = UniPoly([1, -2, 0, 0, 0, 1])
    assert resultant(f, f.derivative()) == sylvester_resultant(list(f.coeffs), list(f.derivative().coeffs))


def test_resultant_zero_raises():
    with pytest.raises(ZeroPolynomial):
        resultant(UniPoly(), UniPoly([1, 1]))


def test_discriminant_examples():
    assert discriminant(UniPoly([1, -2, 0, 0, 0, 1])) == -5067
    assert -5067 == 5**5 - 4**4 * 2**5
    assert discriminant(UniPoly([-1, 1, 1, 1, 1])) == -563 == -5067 // 9
    for b in range(-5, 6):
        for c in range(-5, 6):
            assert discriminant(UniPoly([c, b, 1])) == b * b - 4 * c
    with pytest.raises(ConstantPolynomial):
        discriminant(UniPoly([4]))
    with pytest.raises(ZeroPolynomial):
        discriminant(UniPoly())


def test_discriminant_matches_sylvester_500_samples():
    rng = random.Random(7)
    for _ in range(500):
        d = rng.randint(1, 6)
        c = [rng.randint(-9, 9) for _ in range(d)] + [rng.choice([k for k in range(-9, 10) if k])]
        assert discriminant(UniPoly(c)) == sylvester_discriminant(c)


@settings(max_examples=150)
@given(nonzero_uni(4), nonzero_uni(4), nonzero_uni(4))
def test_resultant_multiplicative(f, g, h):
    assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)


@settings(max_examples=150)
@given(nonzero_uni(5), nonzero_uni(5))
def test_resultant_matches_sylvester(f, g):
    assert resultant(f, g) == sylvester_resultant(list(f.coeffs), list(g.coeffs))


def test_resultant_and_discriminant_in_y():
    T = parse_bi("x^3 + x^2 + x + y")
    assert discriminant_x(T) == UniPoly([-3, 14, -27])
    f, g = parse_bi("x^2 + y*x + 1"), parse_bi("y*x - 2")
    r = resultant_x(f, g)
    for t in range(-4, 5):
        if t:
            assert r(t) == resultant(f.specialize_y(t), g.specialize_y(t))
    # a repeated factor over Q(y) makes the discriminant vanish identically
    assert not discriminant_x(parse_bi("(x - y)^2 * (x + 1)"))


# --- specialization and the hyperbola substitution --------------------------

def test_specialize_y_examples():
    assert specialize_y(parse_bi("x^3 + x^2 + x + y"), 1) == UniPoly([1, 1, 1, 1])
    # thick cycle with odd j at y = -1 gives x^{n-1} + ... + x - 1
    n, j = 5, 3
    expect = UniPoly([-1] + [1] * (n - 1))
    T = BiPoly({(n - 1, 0): 1}) + (BiPoly.y() + sum((BiPoly({(i, 0): 1}) for i in range(1, n - 1)), BiPoly())) * \
        sum((BiPoly({(0, k): 1}) for k in range(j)), BiPoly())
    assert specialize_y(T, -1) == expect


def test_hyperbola_examples():
    assert hyperbola_substitute(parse_bi("x^2 + x + y")) == (2, UniPoly([0, 0, 0, 1]), True)
    for ell in range(5):
        assert hyperbola_substitute(parse_bi(f"(y - 1)^{ell}")) == (-ell, UniPoly([1]), True)
    assert hyperbola_substitute(BiPoly.const(1)) == (0, UniPoly([1]), True)
    with pytest.raises(ZeroPolynomial):
        hyperbola_substitute(BiPoly())
    with pytest.raises(HyperbolaVanishing):
        hyperbola_substitute(parse_bi("x*y - x - y"))


@given(bipolys, bipolys)
def test_hyperbola_multiplicative(u, v):
    try:
        ru, qu, _ = hyperbola_substitute(u)
        rv, qv, _ = hyperbola_substitute(v)
    except ZeroPolynomial:
        return
    r, q, _ = hyperbola_substitute(u * v)
    assert r == ru + rv and q == qu * qv


# --- prime fields ----------------------------------------------------------

def test_reduce_mod_examples():
    assert reduce_mod(UniPoly([1, 3, 2, 1]), 5).coeffs == (1, 3, 2, 1)
    assert reduce_mod(UniPoly([0, 1, 5]), 5).coeffs == (0, 1)
    f = UniPoly([1, -2, 0, 0, 0, 0, 1])
    assert reduce_mod(f, 2).coeffs == (1, 0, 0, 0, 0, 0, 1)
    with pytest.raises(NotPrime):
        reduce_mod(f, 9)
    with pytest.raises(NotPrime):
        reduce_mod(f, 1)


def test_factor_pattern_examples():
    assert factor_pattern(reduce_mod(UniPoly([1, 3, 2, 1]), 5)) == FactorPattern.from_counts({1: 1, 2: 1})
    assert factor_pattern(reduce_mod(UniPoly([1, 0, 1]), 2)) is None
    assert factor_pattern(reduce_mod(UniPoly([1, 1, 1, 1, 1]), 2)) == FactorPattern.from_counts({4: 1})
    # x^p - x splits into p distinct linear factors
    p = 7
    assert factor_pattern(ModPoly(p, (0, -1) + (0,) * (p - 2) + (1,))) == FactorPattern.from_counts({1: p})
    # zero derivative
    assert factor_pattern(ModPoly(3, (1, 0, 0, 1))) is None
    with pytest.raises(ZeroPolynomial):
        factor_pattern(ModPoly(5, ()))
    with pytest.raises(ConstantPolynomial):
        factor_pattern(ModPoly(5, (3,)))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_factor_pattern_matches_trial_division(p):
    rng = random.Random(p)
    for _ in range(60):
        d = rng.randint(1, 8 if p == 2 else 6)
        f = [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)]
        pat = factor_pattern(ModPoly(p, tuple(f)))
        lc, factors = full_factorization_mod_p(f, p)
        prod = [lc]
        for g in factors:
            prod = mul_mod_p(prod, g, p)
        assert prod == [c % p for c in f]
        squarefree = len({tuple(g) for g in factors}) == len(factors)
        assert (pat is not None) == squarefree == is_squarefree_mod(ModPoly(p, tuple(f)))
        if pat is not None:
            degs = {}
            for g in factors:
                degs[len(g) - 1] = degs.get(len(g) - 1, 0) + 1
            assert pat.as_dict() == degs
            assert pat.total == d


def test_factor_pattern_large_prime():
    p = 2**61 - 1
    f = UniPoly([1, 1, 0, 1])  # x^3 + x + 1
    pat = factor_pattern(reduce_mod(f, p))
    assert pat is not None and pat.total == 3


def test_factor_pattern_partition_and_json():
    pat = FactorPattern.from_counts({1: 2, 3: 1})
    assert pat.partition() == (2, 0, 1, 0, 0)
    assert FactorPattern.from_json(pat.to_json()) == pat
