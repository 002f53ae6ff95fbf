"""Numerics for the cubic three-dimensional geometry with norm |x1*x2*x3|^(1/3).

Componentwise number algebra, projection to exponential angles, unit-surface
geodesics, reciprocal and relative bingles (with the non-elementary arc
integral and its inverse), metric invariants, tringles (geodesic-triangle
areas) and cubic-form volume scalars, plus a deterministic CLI.
"""

from .algebra import (
    E1,
    E2,
    E3,
    UNIT,
    Poly3,
    conj,
    div,
    exp3,
    mul,
    norm,
    scalar3,
    signed_cuberoot,
)
from .bingles import (
    Invariants,
    bingle_from_invariants,
    check_additivity,
    coplanarity_residual,
    invariants,
    invariants_raw,
    reciprocal_bingle,
    xi_from_invariants,
)
from .bispace import (
    BingleVec,
    apply_nonlinear,
    biproject,
    bm_norm_flat,
    double_exp_reconstruct,
    homothety_to_translation,
    reconstruct,
    second_biproject,
)
from .errors import (
    Ambiguous,
    BM3Error,
    CoincidentPoints,
    ComplexRoots,
    DegenerateDenominator,
    DegenerateDivisor,
    DegeneratePair,
    DomainError,
    NonPositive,
    NonPositiveNorm,
    NonZeroTrace,
    NotCoplanar,
    NotOrthogonal,
    NullComponent,
    NullSeparated,
    NumericalError,
    OutOfOctant,
    OutOfRange,
    QuadratureFailure,
    ZeroCosine,
)
from .geodesics import (
    Geodesic,
    Identical,
    Parallel,
    Point,
    UnitPoint,
    arclength_numeric,
    geodesic_between,
    geodesic_eval,
    intersect,
    metric_eval,
    q2_principal,
    unit_circle_point,
    unit_point,
)
from .quadrature import QuadratureCfg, integrate
from .relative import (
    F,
    F_signed,
    ConnectCheck,
    RelBingle,
    SYMMETRIC_POINT,
    TrigValues,
    cfh,
    cfh_triple_from_pair,
    check_connect,
    circle_speed_cubed,
    classify,
    directors,
    psi,
    trig,
)
from .selftest import run_selftest
from .tringles import (
    CubicForm2,
    area_density,
    check_tringle_additivity,
    compare_tringle_formulas,
    cubic_delta,
    cubic_det2,
    direction_ratios,
    indicatrix_cubic_form,
    relative_scalar_v,
    s_of_q,
    tringle,
    tringle_closed,
    tringle_pencil,
    tringle_quadrature,
)

__version__ = "0.1.0"
