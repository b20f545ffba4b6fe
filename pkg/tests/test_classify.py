from fractions import Fraction

import pytest

from projflow import (
    AlgebraError,
    AlreadyQuadratic,
    Degenerate,
    Flow,
    HomBir,
    Identity,
    LinearMap2,
    NonIntegerLevel,
    NonRational,
    NonRationalGenus1,
    PHatValue,
    Poly,
    PseudoLog,
    QuadVF,
    RatFn,
    RationalFlow,
    VectorField,
    canonical_flow,
    canonicalize,
    classify_degenerate,
    conjugate_flow,
    dual,
    kapa,
    lookup,
    orbit_invariant,
    pN_map,
    phat_map,
    quadratic_classify,
    reduce_denominator_step,
    step2_obstruction,
    symmetric_family,
    uniN,
    univariate_classify,
    vecc,
    vector_field,
    verify_translation,
    zoo,
)

X = Poly.var(0, 2)
Y = Poly.var(1, 2)


def _rf(n, d=None):
    return RatFn(n) if d is None else RatFn(n, d)


# -- canonicalize ----------------------------------------------------------

def test_canonicalize_identity():
    f = Flow(RatFn.var(0, 2), RatFn.var(1, 2))
    assert isinstance(canonicalize(f), Identity)


def test_canonicalize_zoo_levels_and_orbits():
    for entry in zoo():
        res = canonicalize(entry.flow)
        assert isinstance(res, RationalFlow), entry.name
        assert res.level == entry.level, entry.name
        assert res.orbit_W == entry.orbit_W, entry.name


def test_canonicalize_certificate():
    for name in ("phi_pr", "phi_tor_1", "phi2_1", "Phi_2"):
        entry = lookup(name)
        res = canonicalize(entry.flow)
        assert conjugate_flow(entry.flow, res.ell) == canonical_flow(res.level)


def test_canonicalize_coordinates():
    for entry in zoo():
        res = canonicalize(entry.flow)
        if entry.level == 1:
            assert isinstance(res.coords, PHatValue)
            assert res.coords == entry.coords, entry.name
        elif entry.level >= 2:
            assert res.coords == entry.coords, entry.name


def test_canonicalize_degenerate_flows():
    f = Flow(RatFn.const(Fraction(0), 2), _rf(Y, Y + 1))
    res = canonicalize(f)
    assert isinstance(res, Degenerate)
    assert (res.R, res.c, res.A, res.B) == (_rf(Y), 1, 0, 1)
    g = Flow(RatFn.const(Fraction(0), 2), _rf(Y))
    res = canonicalize(g)
    assert isinstance(res, Degenerate)
    assert (res.R, res.c, res.A, res.B) == (_rf(Y), 0, 0, 1)


def test_classify_degenerate_zero_flow():
    zero = RatFn.const(Fraction(0), 2)
    res = classify_degenerate(Flow(zero, zero))
    assert isinstance(res, Degenerate)
    assert (res.c, res.A, res.B) == (0, 0, 0)


def test_canonicalize_pseudolog():
    vf = VectorField(-X * X - X * Y, -Y * Y)
    f = None
    res = univariate_classify(QuadVF(-1, -1, 0))
    assert isinstance(res, PseudoLog)


def test_canonicalize_non_integer_level():
    res = univariate_classify(QuadVF(1, 0, -1))
    assert isinstance(res, NonIntegerLevel)


# -- univariate layer ------------------------------------------------------

def test_univariate_classify_canonical():
    for N in (1, 2, 3, 5):
        res = univariate_classify(QuadVF(0, N - 1, 0))
        assert res["kind"] == "level" and res["N"] == N


def test_univariate_families_translation():
    import random
    rng = random.Random(17)
    for N in (1, 2, 3, 5):
        for _ in range(3):
            sigma = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            tau = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            kappa = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            assert verify_translation(uniN(N, sigma, tau))
            assert verify_translation(kapa(N, kappa))


def test_vecc_matches_families():
    for N in (1, 2, 3):
        sigma, tau = Fraction(2), Fraction(-1, 2)
        assert vector_field(uniN(N, sigma, tau)) == vecc(N, sigma, tau)


# -- quadratic classification (Step III) -----------------------------------

def test_quadratic_genus1_pairs():
    cases = [
        ((X * X - 2 * X * Y, -2 * X * Y + Y * Y), (-2, -2),
         _rf(X * Y * (X - Y))),
        ((X * X - 3 * X * Y, -3 * X * Y + Y * Y), (-3, -3),
         _rf(X * Y * (X - Y) ** 2)),
        ((X * X - X * Y, -2 * X * Y + Y * Y), (-1, -2),
         _rf(X ** 4 * Y * Y - Fraction(2, 3) * X ** 3 * Y ** 3)),
    ]
    for (w, r), pair, _W in cases:
        res = quadratic_classify(w, r)
        assert isinstance(res, NonRationalGenus1)
        assert tuple(sorted(res.pair)) == tuple(sorted(pair))


def test_quadratic_genus1_orbit_polys():
    res = quadratic_classify(X * X - 2 * X * Y, -2 * X * Y + Y * Y)
    assert res.orbit_W == _rf(X * Y * (X - Y))
    res = quadratic_classify(X * X - 3 * X * Y, -3 * X * Y + Y * Y)
    assert res.orbit_W == _rf(X * Y * (X - Y) ** 2)
    res = quadratic_classify(X * X - X * Y, -2 * X * Y + Y * Y)
    # (3x - 2y) x^3 y^2 up to monic normalization
    expect = (_rf((3 * X - 2 * Y) * X ** 3 * Y * Y)
              * Fraction(1, 3)).scale_num_monic()
    assert res.orbit_W == expect


def test_quadratic_rational_terminal():
    res = quadratic_classify(X * Y, -(Y * Y))
    assert isinstance(res, dict) and res["kind"] == "univariate"
    sub = res["classification"]
    assert sub["kind"] == "level" and sub["N"] == 2


def test_quadratic_log_obstruction():
    res = quadratic_classify(X * Y, X * Y + Y * Y)
    assert isinstance(res, NonRational) and res.tag == "log_type"
    res = quadratic_classify(X * X + 2 * X * Y, -3 * X * Y + Y * Y)
    assert isinstance(res, NonRational)
    assert res.tag == "non_integer_exponent"


# -- Step II and denominator reduction -------------------------------------

def test_step2_rational_branches():
    res = step2_obstruction(VectorField(Y * Y, Poly.zero(2)))
    assert res["kind"] == "rational"
    assert res["flow"] == Flow(_rf(X + Y * Y), _rf(Y))
    assert verify_translation(res["flow"])
    res = step2_obstruction(VectorField(-(X * X), Poly.zero(2)))
    assert res["kind"] == "rational"
    assert verify_translation(res["flow"])


def test_step2_non_rational_branches():
    res = step2_obstruction(VectorField(X * Y, Poly.zero(2)))
    assert isinstance(res, NonRational) and res.tag == "phi_e"
    res = step2_obstruction(VectorField(X * X + Y * Y, Poly.zero(2)))
    assert isinstance(res, NonRational) and res.tag == "phi_t"
    res = step2_obstruction(VectorField(X * X - Y * Y, Poly.zero(2)))
    assert isinstance(res, NonRational) and res.tag == "phi_e_prime"


def test_reduce_denominator_zoo_fields():
    for name, expect in (
        ("phi2_1", (X * Y, -(Y * Y))),
        ("phi1_1", (Y * Y, -(Y * Y))),
        ("phi0_2", (-(X * X), -X * Y)),
        ("phi2_3", (-2 * X * X + X * Y, -(Y * Y))),
    ):
        vf = lookup(name).vf
        res = reduce_denominator_step(vf)
        assert not isinstance(res, (AlreadyQuadratic,)), name
        got = res["vf"]
        assert (got.w, got.r) == (_rf(expect[0]), _rf(expect[1])), name


def test_reduce_denominator_already_quadratic():
    res = reduce_denominator_step(VectorField(X * Y, -(Y * Y)))
    assert isinstance(res, AlreadyQuadratic)


# -- coordinates, orbit invariants, duality --------------------------------

def test_orbit_invariant_zoo():
    for entry in zoo():
        assert orbit_invariant(entry.vf, entry.level) == entry.orbit_W, \
            entry.name


def test_pN_map():
    p = pN_map(canonical_flow(3))
    assert (p.X, p.Y, p.Z, p.N) == (0, 2, 0, 3)
    p = pN_map(lookup("Phi_2").flow)
    assert (p.X, p.Y, p.Z, p.N) == (-1, -1, 1, 2)
    with pytest.raises(AlgebraError):
        pN_map(canonical_flow(1))


def test_phat_map():
    for name in ("phi_sph_inf", "phi_tor_inf", "phi_tor_1", "Psi",
                 "Phi_1", "Phi_1_prime", "phi_-1", "phi1_1", "phi_sph_1"):
        entry = lookup(name)
        assert phat_map(entry.flow) == entry.coords, name
    with pytest.raises(AlgebraError):
        phat_map(canonical_flow(2))


def test_dual_of_canonical():
    for N in (2, 3, 4):
        g = dual(canonical_flow(N))
        expect = Flow(_rf(X, X + 1), _rf(Y, (X + 1) ** (N + 1)))
        assert g == expect


def test_dual_is_involution_on_level2():
    for entry in zoo():
        if entry.level == 2:
            assert dual(dual(entry.flow)) == entry.flow, entry.name


def test_dual_swaps_Phi2():
    g = dual(lookup("Phi_2").flow)
    assert verify_translation(g)
    assert dual(g) == lookup("Phi_2").flow


# -- symmetric families ----------------------------------------------------

def test_symmetric_families_translate():
    from projflow import is_i0_symmetric
    for N, which in ((1, "Phi"), (1, "phi_tor_1"), (1, "Psi"),
                     (2, "Phi"), (-2, "Phi"), (3, "Phi")):
        f = symmetric_family(N, which)
        assert verify_translation(f)
        assert is_i0_symmetric(f)


def test_zoo_lookup():
    assert lookup("phi_2").flow == canonical_flow(2)
    with pytest.raises(KeyError):
        lookup("nope")
