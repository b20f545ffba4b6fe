import math
from fractions import Fraction

import pytest

from projflow import (
    AlgebraError,
    Flow,
    Poly,
    PoleAtDirection,
    RatFn,
    VectorField,
    canonical_flow,
    diagonal_series,
    expand_flow,
    expand_from_vf,
    prime_growth_diagnostic,
    lookup,
    vector_field,
)

X = Poly.var(0, 2)
Y = Poly.var(1, 2)


def test_exponential_jets():
    jets = expand_from_vf(VectorField(X * Y, Poly.zero(2)), 6)
    for i in range(1, 7):
        expect = RatFn(X * Y ** (i - 1)) * Fraction(1, math.factorial(i - 1))
        assert jets.u_parts[i - 1] == expect
        assert jets.v_parts[i - 1] == (RatFn.var(1, 2) if i == 1
                                       else RatFn(Poly.zero(2)))


def test_zero_field_gives_identity_jets():
    jets = expand_from_vf(VectorField(Poly.zero(2), Poly.zero(2)), 5)
    assert jets.u_parts[0] == RatFn.var(0, 2)
    for p in jets.u_parts[1:]:
        assert p.is_zero()
    for p in jets.v_parts[1:]:
        assert p.is_zero()


def test_order_precondition():
    with pytest.raises(AlgebraError):
        expand_from_vf(VectorField(X * Y, Poly.zero(2)), 1)


def test_genus1_diagonal_coefficients():
    vf = VectorField(X * X - 2 * X * Y, -2 * X * Y + Y * Y)
    jets = expand_from_vf(vf, 9)
    coeffs = diagonal_series(jets, (Fraction(1), Fraction(-1)))
    assert coeffs == [Fraction(c) for c in
                      (1, 3, 3, 3, 6, 9, 12, Fraction(117, 7),
                       Fraction(171, 7))]


def test_genus1_f_slices():
    # slices at fixed y of the degree-2 parts recover 1 - 2y + y^2 and 1 - y
    vf = VectorField(X * X - 2 * X * Y, -2 * X * Y + Y * Y)
    jets = expand_from_vf(vf, 3)
    w2 = jets.u_parts[1]
    # w2 = x^2 - 2xy = x^2 (1 - 2(y/x)); coefficient pattern check
    assert w2 == RatFn(X * X - 2 * X * Y)
    assert jets.v_parts[1] == RatFn(-2 * X * Y + Y * Y)


def test_diagonal_exponential_pattern():
    jets = expand_from_vf(VectorField(X * Y, Poly.zero(2)), 8)
    coeffs = diagonal_series(jets, (Fraction(1), Fraction(1)))
    assert coeffs == [Fraction(1, math.factorial(i)) for i in range(8)]


def test_diagonal_identity():
    ident = Flow(RatFn.var(0, 2), RatFn.var(1, 2))
    jets = expand_flow(ident, 5)
    coeffs = diagonal_series(jets, (Fraction(2), Fraction(3)))
    assert coeffs == [Fraction(2), 0, 0, 0, 0]


def test_expand_flow_phi2():
    jets = expand_flow(canonical_flow(2), 4)
    assert jets.u_parts[1] == RatFn(X * Y)
    assert jets.v_parts[1] == RatFn(-(Y * Y))


def test_expand_flow_matches_vf_expansion():
    pr = lookup("phi_pr").flow
    jets = expand_flow(pr, 3)
    vf = VectorField(-(X * (X + Y)), -(Y * (X + Y)))
    assert jets == expand_from_vf(vf, 3)


def test_zoo_consistency_small_order():
    for name in ("phi0_1", "phi_sph_1", "phi_2", "phi2_1", "Phi_2"):
        entry = lookup(name)
        assert expand_flow(entry.flow, 5) == expand_from_vf(
            vector_field(entry.flow), 5)


def test_pole_at_direction():
    f = lookup("Psi").flow
    jets = expand_flow(f, 6)
    with pytest.raises(PoleAtDirection):
        # some jet has denominator (x - y)^2; the diagonal hits the pole
        diagonal_series(jets, (Fraction(1), Fraction(1)))


def test_prime_growth_unbounded_for_genus1():
    vf = VectorField(X * X - 2 * X * Y, -2 * X * Y + Y * Y)
    jets = expand_from_vf(vf, 60)
    coeffs = diagonal_series(jets, (Fraction(1), Fraction(-1)))
    report = prime_growth_diagnostic(coeffs)
    assert report["unbounded_denominator_primes_suspected"] is True
    assert report["max_prime"] is not None and report["max_prime"] > 10


def test_prime_growth_bounded_for_rational_flow():
    jets = expand_flow(canonical_flow(2), 100)
    coeffs = diagonal_series(jets, (Fraction(1), Fraction(1, 2)))
    report = prime_growth_diagnostic(coeffs)
    assert report["unbounded_denominator_primes_suspected"] is False


def test_prime_growth_integer_coefficients():
    report = prime_growth_diagnostic([Fraction(k) for k in range(50)])
    assert report["max_prime"] is None
    assert report["unbounded_denominator_primes_suspected"] is False


def test_prime_growth_needs_50():
    with pytest.raises(AlgebraError):
        prime_growth_diagnostic([Fraction(1)] * 10)
