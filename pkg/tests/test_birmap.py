import random
from fractions import Fraction

import pytest

from projflow import (
    Flow,
    HomBir,
    LinearMap2,
    Poly,
    RatFn,
    canonical_flow,
    classify_involution,
    conjugate_flow,
    conjugate_vf,
    conjugate_vf_linear,
    conjugate_vf_radial,
    vector_field,
    verify_translation,
)

X = Poly.var(0, 2)
Y = Poly.var(1, 2)
SWAP = LinearMap2(0, 1, 1, 0)
JROT = LinearMap2(0, 1, -1, 0)  # L^2 = -id


def _rand_poly(rng, deg):
    while True:
        terms = {}
        for i in range(deg + 1):
            c = rng.randint(-3, 3)
            if c:
                terms[(i, deg - i)] = Fraction(c)
        if terms:
            return Poly(2, terms)


def _rand_hombir(rng, deg=2):
    while True:
        P = _rand_poly(rng, deg)
        Q = _rand_poly(rng, deg)
        a, b, c, d = (rng.randint(-2, 2) for _ in range(4))
        if a * d - b * c != 0 and not (P * Q).is_zero():
            return HomBir(P, Q, LinearMap2(a, b, c, d))


def test_group_identity_and_inverse():
    rng = random.Random(7)
    e = HomBir.identity()
    for _ in range(15):
        a = _rand_hombir(rng)
        assert a.compose(e) == a
        assert e.compose(a) == a
        assert a.compose(a.inverse()).is_identity()
        assert a.inverse().compose(a).is_identity()


def test_group_associativity():
    rng = random.Random(11)
    for _ in range(8):
        a, b, c = (_rand_hombir(rng, 1) for _ in range(3))
        assert a.compose(b).compose(c) == a.compose(b.compose(c))


def test_pointwise_soundness():
    rng = random.Random(3)
    from projflow.algebra import IdenticallySingular
    pts = [(Fraction(1), Fraction(2)), (Fraction(-2), Fraction(3)),
           (Fraction(1, 2), Fraction(-1, 3))]
    for _ in range(10):
        a = _rand_hombir(rng, 1)
        b = _rand_hombir(rng, 1)
        ab = a.compose(b)
        for x0, y0 in pts:
            p = (RatFn.const(x0, 2), RatFn.const(y0, 2))
            try:
                expect = a.apply(b.apply(p))
                got = ab.apply(p)
            except (ZeroDivisionError, IdenticallySingular):
                continue
            assert got == expect


def test_involution_i_plus_example():
    a = HomBir(X, Y, SWAP)
    u, v = a.coords()
    assert u == RatFn(Y * Y, X)
    assert v == RatFn(Y)
    assert classify_involution(a).tag == "IPlusPlus"


def test_involution_i_minus_example():
    L = LinearMap2(1, -1, 2, -1)   # L^2 = -id
    a = HomBir(-X, Y - X, L)
    u, v = a.coords()
    assert u == RatFn(-((X - Y) ** 2), X)
    assert v == RatFn((X - Y) * (Y - 2 * X), X)
    assert classify_involution(a).tag == "IMinusPlus"


def test_involution_i0():
    a = HomBir.linear(SWAP)
    assert classify_involution(a).tag == "IPlusPlus"


@pytest.mark.parametrize("tag,L,sign,degs", [
    ("IPlusPlus", SWAP, 1, (1, 2, 3)),
    ("IPlusMinus", SWAP, -1, (1, 2, 3)),
    ("IMinusPlus", JROT, 1, (1, 3)),
    ("IMinusMinus", JROT, -1, (1, 3)),
])
def test_generated_involutions(tag, L, sign, degs):
    rng = random.Random(hash(tag) & 0xFFFF)
    produced = 0
    lx, ly = L.coord_polys()
    while produced < 20:
        P = _rand_poly(rng, degs[produced % len(degs)])
        Q = P.subs_polys([lx, ly]) * sign
        if Q.is_zero():
            continue
        a = HomBir(P, Q, L)
        if not a.compose(a).is_identity():
            continue
        got = classify_involution(a).tag
        # degenerate P (e.g. symmetric under L) may collapse the class
        if got != tag:
            assert got in ("IPlusPlus", "IPlusMinus",
                           "IMinusPlus", "IMinusMinus")
            continue
        produced += 1
    assert produced == 20


def test_involution_i_conjugates_canonical_flows():
    i = HomBir.involution_i()
    assert classify_involution(i).tag == "IPlusPlus"
    for N in range(-5, 6):
        f = canonical_flow(N)
        assert conjugate_flow(f, i) == canonical_flow(-N), N


def _conjugator_pool():
    return [
        HomBir.linear(LinearMap2(1, 1, 0, 1)),
        HomBir.linear(LinearMap2(2, -1, 1, 1)),
        HomBir.from_A(RatFn(X, Y)),
        HomBir.from_A(RatFn(Y, X + Y)),
        HomBir.involution_i(),
    ]


def test_conjugate_flow_is_group_action():
    f = canonical_flow(2)
    pool = _conjugator_pool()
    pairs = [(pool[0], pool[2]), (pool[1], pool[4]), (pool[3], pool[0]),
             (pool[4], pool[1])]
    for a, b in pairs:
        lhs = conjugate_flow(conjugate_flow(f, a), b)
        rhs = conjugate_flow(f, a.compose(b))
        assert lhs == rhs


def test_conjugation_preserves_translation_equation():
    f = canonical_flow(2)
    pool = _conjugator_pool()
    for a in (pool[0], pool[1], pool[4]):
        g = conjugate_flow(f, a)
        assert verify_translation(g)


def test_vf_conjugation_consistent_with_flow_conjugation():
    f = canonical_flow(3)
    vf = vector_field(f)
    pool = _conjugator_pool()
    for a in (pool[0], pool[1], pool[4]):
        g = conjugate_flow(f, a)
        assert vector_field(g) == conjugate_vf(vf, a)


def test_radial_and_linear_pieces():
    A = RatFn(X, Y)
    f = canonical_flow(2)
    vf = vector_field(f)
    ra = HomBir.from_A(A)
    assert conjugate_vf(vf, ra) == conjugate_vf_radial(vf, A)
    li = HomBir.linear(LinearMap2(1, 2, 0, 1))
    assert conjugate_vf(vf, li) == conjugate_vf_linear(
        vf, LinearMap2(1, 2, 0, 1))
