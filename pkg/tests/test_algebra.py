from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from projflow.algebra import (
    IdenticallySingular,
    Poly,
    RatFn,
    LinearMap2,
    divexact,
    poly_gcd,
    poly_lcm,
    linear_factors_q,
    count_real_projective_roots,
)

X = Poly.var(0, 2)
Y = Poly.var(1, 2)


def test_poly_basic_arithmetic():
    p = (X + Y) * (X - Y)
    assert p == X * X - Y * Y
    assert (X + 1) ** 2 == X * X + 2 * X + 1
    assert (p - p).is_zero()


def test_poly_gcd_oracles():
    assert poly_gcd(X * X * Y + X * Y * Y, X * X - Y * Y) == X + Y
    assert poly_gcd(X * X + Y * Y, X + Y).is_constant()


def test_divexact_roundtrip():
    a = (X + Y) ** 2 * (X - 2 * Y)
    b = X + Y
    assert divexact(a, b) * b == a


def test_linear_factors_q():
    p = X * X * Y - X * Y * Y
    scale, factors, rem = linear_factors_q(p)
    prod = Poly.const(2, scale)
    for fac, mult in factors:
        prod = prod * fac ** mult
    assert prod * rem == p
    assert rem.is_constant()


def test_linear_factors_irrational_remainder():
    p = X * X + Y * Y
    scale, factors, rem = linear_factors_q(p)
    assert factors == []
    assert not rem.is_constant()


def test_count_real_projective_roots():
    assert count_real_projective_roots(X * Y * (X - Y)) == 3
    assert count_real_projective_roots(X * X + Y * Y) == 0
    assert count_real_projective_roots((X - Y) ** 2) == 2


def test_ratfn_reduction_and_equality():
    r = RatFn(X * X - Y * Y, X + Y)
    assert r == RatFn(X - Y)
    assert RatFn(X, Y) + RatFn(Y, X) == RatFn(X * X + Y * Y, X * Y)


def test_ratfn_substitution_singular():
    r = RatFn(Poly.const(2, 1), X + Y)
    with pytest.raises(IdenticallySingular):
        r.subs((RatFn(X), RatFn(-X)))


def test_linear_map():
    L = LinearMap2(1, 2, 3, 4)
    Li = L.inverse()
    assert L.compose(Li).scalar_multiple_of_identity()
    assert L.det() == -2


def test_unit_normal_sign():
    p = -2 * X + 2 * Y
    n = p.unit_normal()
    assert n.leading_coeff() > 0
    assert n == X - Y


_coef = st.integers(-4, 4)


@st.composite
def small_poly(draw, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        i = draw(st.integers(0, max_deg))
        j = draw(st.integers(0, max_deg - i))
        c = draw(_coef)
        if c:
            terms[(i, j)] = terms.get((i, j), 0) + c
    return Poly(2, {k: Fraction(v) for k, v in terms.items() if v})


@given(small_poly(), small_poly())
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(a, b):
    if a.is_zero() or b.is_zero():
        return
    g = poly_gcd(a, b)
    assert divexact(a, g) * g == a
    assert divexact(b, g) * g == b
    assert g.leading_coeff() > 0


@given(small_poly(), small_poly())
@settings(max_examples=40, deadline=None)
def test_lcm_definition(a, b):
    if a.is_zero() or b.is_zero():
        return
    m = poly_lcm(a, b)
    g = poly_gcd(a, b)
    assert (m * g).unit_normal() == (a * b).unit_normal()


@given(small_poly())
@settings(max_examples=40, deadline=None)
def test_factorization_reassembles(p):
    if p.is_zero():
        return
    hom = {}
    for e, c in p.terms.items():
        hom[e] = c
    # homogenize p for the projective factorizer
    d = max(sum(e) for e in hom)
    ph = Poly(2, {(e[0], e[1] + d - sum(e)): c for e, c in hom.items()})
    scale, factors, rem = linear_factors_q(ph)
    prod = Poly.const(2, scale)
    for fac, mult in factors:
        prod = prod * fac ** mult
    assert prod * rem == ph
