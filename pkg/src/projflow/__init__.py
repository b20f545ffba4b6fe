"""Exact computer algebra for 2-dimensional rational projective flows."""

from .algebra import (
    AlgebraError,
    IdenticallySingular,
    NeedsRationalRoot,
    Poly,
    RatFn,
    LinearMap2,
    divexact,
    poly_gcd,
    poly_lcm,
    linear_factors_q,
    count_real_projective_roots,
)
from .flowcore import (
    Flow,
    VectorField,
    LevelResult,
    HyperboloidPoint,
    DegenerateJacobian,
    NotLevel0Form,
    check_boundary,
    verify_translation,
    verify_pde,
    vector_field,
    level_of,
    zeros_poles,
    is_i0_symmetric,
    level0_J,
    level0_flow,
    compose_flows_level0,
)
from .birmap import (
    HomBir,
    conjugate_flow,
    conjugate_vf,
    conjugate_vf_linear,
    conjugate_vf_radial,
    classify_involution,
)
from .series import (
    JetTable,
    PoleAtDirection,
    expand_from_vf,
    expand_flow,
    diagonal_series,
    prime_growth_diagnostic,
)
from .odesolve import (
    LinODE,
    CapExceeded,
    NoRationalSolution,
    rational_solutions,
    dehomogenize,
    homogenize_0,
    differ_ode,
    solve_differ,
    orbit_ode_reduce,
)
from .classify import (
    Verdict,
    Identity,
    Degenerate,
    RationalFlow,
    NonRationalGenus1,
    PseudoLog,
    NonIntegerLevel,
    NonRational,
    NeedsRationalRootVerdict,
    Obstruction,
    AlreadyQuadratic,
    NotDegenerate,
    VerificationFailed,
    PHatValue,
    QuadVF,
    canonical_flow,
    canonicalize,
    classify_degenerate,
    reduce_denominator_step,
    step2_obstruction,
    quadratic_classify,
    univariate_classify,
    orbit_invariant,
    pN_map,
    phat_map,
    dual,
    uniN,
    kapa,
    vecc,
    symmetric_family,
    zoo,
    lookup,
)
from .parser import (
    ParseError,
    parse_expr,
    parse_flow,
    parse_vector_field,
    parse_input,
    print_flow,
    print_vector_field,
)

__version__ = "1.0.0"
