from fractions import Fraction

import pytest

from projflow import (
    CapExceeded,
    LinODE,
    NoRationalSolution,
    Poly,
    RatFn,
    VectorField,
    dehomogenize,
    differ_ode,
    homogenize_0,
    orbit_ode_reduce,
    rational_solutions,
    solve_differ,
    vector_field,
    canonical_flow,
    lookup,
)

X = Poly.var(0, 2)
Y = Poly.var(1, 2)
T = Poly.var(0, 1)


def _const(c):
    return RatFn.const(Fraction(c), 1)


def test_radial_equation_N_ge_2():
    # -N x f' - f = -1 has particular f = 1 and no rational homogeneous
    # solution (the missing one is an irrational power of x)
    for N in (2, 3, 5):
        ode = LinODE(RatFn(T) * Fraction(-N), _const(-1), _const(-1))
        sol = rational_solutions(ode)
        assert sol["particular"] == RatFn.const(Fraction(1), 1)
        assert sol["homogeneous_basis"] is None


def test_radial_equation_N_1():
    ode = LinODE(RatFn(T) * Fraction(-1), _const(-1), _const(-1))
    sol = rational_solutions(ode)
    assert sol["particular"] == RatFn.const(Fraction(1), 1)
    assert sol["homogeneous_basis"] == RatFn(Poly.const(1, 1), T)


def test_derivative_zero():
    ode = LinODE(_const(1), _const(0), _const(0))
    sol = rational_solutions(ode)
    assert sol["particular"] is not None and sol["particular"].is_zero()
    assert sol["homogeneous_basis"] == RatFn.const(Fraction(1), 1)


def test_residual_is_zero_property():
    odes = [
        LinODE(RatFn(T * T + Poly.const(1, 1)), RatFn(T), _const(1)),
        LinODE(RatFn(T), _const(2), RatFn(T * T)),
        LinODE(_const(1), RatFn(T), RatFn(T)),
    ]
    for ode in odes:
        sol = rational_solutions(ode)
        if sol["particular"] is not None:
            assert ode.residual(sol["particular"]).is_zero()
        if sol["homogeneous_basis"] is not None:
            g = sol["homogeneous_basis"]
            assert (ode.p * g.derivative(0) + ode.q * g).is_zero()


def test_nonexistence_certified():
    # x f' - (1/2) f = 0 has only the irrational solution x^{1/2}
    ode = LinODE(RatFn(T), _const(Fraction(-1, 2)), _const(0))
    sol = rational_solutions(ode)
    assert sol["particular"] is not None and sol["particular"].is_zero()
    assert sol["homogeneous_basis"] is None


def test_cap_exceeded():
    # x f' - 500 f = 0 -> rational solution x^500 beyond the degree cap
    ode = LinODE(RatFn(T), _const(-500), _const(0))
    with pytest.raises(CapExceeded):
        rational_solutions(ode)


def test_dehomogenize_homogenize_roundtrip():
    A = RatFn(X * X + 3 * X * Y, Y * Y - X * Y)
    t = dehomogenize(A)
    assert homogenize_0(t) == A


def test_solve_differ_sphere_family():
    # level-1 field ((x-y)^2, (x-y)^2): one-parameter family
    vf = VectorField((X - Y) * (X - Y), (X - Y) * (X - Y))
    sol = solve_differ(vf)
    f = sol["particular"]
    g = sol["homogeneous_basis"]
    assert g is not None
    # A_sigma(x, y) = y^2/(x-y)^2 + sigma * y/(x-y)
    A0 = RatFn(Y * Y, (X - Y) * (X - Y))
    A1 = RatFn(Y, X - Y)
    base = homogenize_0(f)
    hom = homogenize_0(g)
    # base must be A0 + c*A1 for some rational c; hom proportional to A1
    assert hom.num * A1.den == hom.den * A1.num or \
        (hom / A1).num.is_constant() and (hom / A1).den.is_constant()
    diff = base - A0
    if not diff.is_zero():
        ratio = diff / A1
        assert ratio.num.is_constant() and ratio.den.is_constant()
    for sigma in (Fraction(0), Fraction(2), Fraction(-1, 3)):
        cand = A0 + A1 * sigma
        t = dehomogenize(cand)
        ode = differ_ode(vf)
        assert ode.residual(t).is_zero()


def test_solve_differ_canonical_unique():
    for N in (2, 3):
        vf = vector_field(canonical_flow(N))
        sol = solve_differ(vf)
        assert sol["particular"] == RatFn.const(Fraction(1), 1)
        assert sol["homogeneous_basis"] is None


def test_solve_differ_no_rational_solution():
    # genus-1 field: the univariate form still exists; use a field where the
    # equation is blocked instead -- pseudo-log-like (-x^2-xy, -y^2) has a
    # rational solution, so construct a field with irrational indicial data
    vf = VectorField(2 * X * X - Y * Y, Poly.zero(2))
    try:
        solve_differ(vf)
    except NoRationalSolution:
        pass  # acceptable: certified nonexistence
    # either outcome must be consistent: if a solution is returned it solves
    # the equation (checked inside rational_solutions via residual assert)


def test_orbit_ode_phi2():
    vf = VectorField(X * Y, -(Y * Y))
    ode = orbit_ode_reduce(vf, 2)
    sol = rational_solutions(ode)
    w = sol["homogeneous_basis"]
    assert w == RatFn(T)  # w(t) = t, so W = x*y


def test_orbit_ode_genus1():
    vf = VectorField(X * X - 2 * X * Y, -2 * X * Y + Y * Y)
    ode = orbit_ode_reduce(vf, 3)
    sol = rational_solutions(ode)
    w = sol["homogeneous_basis"]
    assert w == RatFn(T * T - T)  # W = xy(x-y) after homogenization


def test_orbit_ode_constant():
    vf = VectorField(Poly.zero(2), -(Y * Y))
    ode = orbit_ode_reduce(vf, 1)
    sol = rational_solutions(ode)
    assert sol["homogeneous_basis"] == RatFn(T)


def test_orbit_ode_precondition():
    vf = VectorField(X * Y, -(Y * Y))
    with pytest.raises(Exception):
        orbit_ode_reduce(vf, 0)


def test_homogeneous_dimension_at_most_one():
    odes = [
        LinODE(_const(1), _const(0), _const(0)),
        LinODE(RatFn(T), _const(-2), _const(0)),
        LinODE(RatFn(T * T), RatFn(T), _const(0)),
    ]
    for ode in odes:
        sol = rational_solutions(ode)
        assert sol["homogeneous_basis"] is None or isinstance(
            sol["homogeneous_basis"], RatFn)
