"""Relative bingles: the azimuth-like second angle of a vector pair.

The direction of the extremal joining two unit points is captured by three
director exponents (sum 0, product -1).  The relative bingle is the
arclength along the unit geodesic circle from that component's symmetric
point to where the extremal crosses the circle; it is F(t) of the
component's positive parametrizing director, where F is a non-elementary
integral.  F is V-shaped with minimum 0 at 2^(-1/3); cfh inverts its
monotone increasing branch and plays the role of a hyperbolic cosine in the
trigonometric identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from scipy.optimize import brentq

from .algebra import Poly3, signed_cuberoot
from .bispace import BingleVec, biproject, second_biproject
from .errors import (
    Ambiguous,
    DomainError,
    NonPositive,
    NullComponent,
    NullSeparated,
    OutOfRange,
    ZeroCosine,
)
from .geodesics import q2_principal
from .quadrature import DEFAULT_CFG, QuadratureCfg, Rule, integrate

#: Argument at which F vanishes: the symmetric point 2^(-1/3).
SYMMETRIC_POINT = 2.0 ** (-1.0 / 3.0)

#: Hard lower cutoff on the integration variable of F.
F_CUTOFF = 1e-12

#: Smallest bracket endpoint for lower-branch inversion; F grows only
#: logarithmically below the symmetric point, and the default depth budget
#: stops converging near the 1/x blow-up somewhere below this.
LOWER_BRANCH_FLOOR = 1e-6

ComponentLabel = Literal["1+", "1-", "2+", "2-", "3+", "3-"]


def _directors(a: Poly3, b: Poly3) -> tuple[tuple[float, float, float], float]:
    ua, ub = biproject(a), biproject(b)
    d1, d2 = ub.x1 - ua.x1, ub.x2 - ua.x2
    d3 = ub.x3 - ua.x3
    p = d1 * d2 * (d1 + d2)
    if p == 0.0:
        raise NullSeparated(
            f"angle differences ({d1!r}, {d2!r}, {d3!r}) have zero product"
        )
    s_star = signed_cuberoot(p)
    return (d1 / s_star, d2 / s_star, d3 / s_star), s_star


def directors(a: Poly3, b: Poly3) -> tuple[float, float, float]:
    """Director exponents of the extremal from a's ray toward b's ray.

    q_i = (xB_i - xA_i)/s with the signed arclength s between the unit
    points; the triple satisfies q1+q2+q3 = 0 and q1*q2*q3 = -1.
    """
    return _directors(a, b)[0]


def classify(q: tuple[float, float, float], s_sign: int) -> ComponentLabel:
    """Unit-circle component hit by a direction (q1, q2, q3) at radius sign s.

    Components: q1 > 0, q2 > 0 -> 3; q1 < 0, q2 > 0 -> 2; q1 > 0, q2 < 0 -> 1;
    the +/- suffix is the sign of the connecting arclength.  A zero director
    sits on a component boundary and cannot be classified.
    """
    q1, q2, q3 = q
    if q1 == 0.0 or q2 == 0.0 or q3 == 0.0:
        raise Ambiguous(f"zero director in {q!r}")
    if s_sign not in (1, -1):
        raise ValueError(f"s_sign must be +1 or -1, got {s_sign!r}")
    suffix = "+" if s_sign > 0 else "-"
    if q1 > 0.0 and q2 > 0.0:
        return "3" + suffix  # type: ignore[return-value]
    if q1 < 0.0 and q2 > 0.0:
        return "2" + suffix  # type: ignore[return-value]
    if q1 > 0.0 and q2 < 0.0:
        return "1" + suffix  # type: ignore[return-value]
    # q1 < 0 and q2 < 0 cannot satisfy sum 0, product -1
    raise Ambiguous(f"direction {q!r} violates the director sign structure")


def circle_speed_cubed(x: float) -> float:
    """Cube of the circle-arclength derivative at parameter x > 0.

    Equals d2 + d2^2 with d2 = dq2/dq1 on the principal branch; written in
    the cancellation-free closed form -q2*(x^2-q2^2)*(q2+2x)/(x^4+4x).
    Vanishes at the symmetric point and changes sign there.
    """
    q2 = q2_principal(x)
    return -q2 * (x * x - q2 * q2) * (q2 + 2.0 * x) / (x**4 + 4.0 * x)


def F(xi: float, cfg: QuadratureCfg | None = None, rule: Rule = "kronrod") -> float:
    """Circle arclength from the symmetric point to parameter xi > 0.

    F(xi) = -integral from 2^(-1/3) to xi of the signed cube root of
    circle_speed_cubed; nonnegative, V-shaped, zero exactly at 2^(-1/3).
    The cube-root zero at the fixed endpoint is removed by the substitution
    x = 2^(-1/3) +- t^3, after which the integrand is smooth.  Arguments
    below the cutoff 1e-12 are clamped (F grows like log(1/xi) there).
    """
    if xi <= 0.0:
        raise NonPositive(f"F needs xi > 0, got {xi!r}")
    xi = max(xi, F_CUTOFF)
    if xi == SYMMETRIC_POINT:
        return 0.0
    cfg = cfg or DEFAULT_CFG
    sgn = 1.0 if xi > SYMMETRIC_POINT else -1.0
    tmax = abs(xi - SYMMETRIC_POINT) ** (1.0 / 3.0)

    def h(t: float) -> float:
        x = SYMMETRIC_POINT + sgn * t**3
        if x <= 0.0:  # rounding guard at the far endpoint
            x = F_CUTOFF
        return signed_cuberoot(circle_speed_cubed(x)) * 3.0 * t * t * sgn

    return -integrate(h, 0.0, tmax, cfg, rule)


def F_signed(xi: float, cfg: QuadratureCfg | None = None, rule: Rule = "kronrod") -> float:
    """Monotone variant sign(xi - 2^(-1/3)) * F(xi), increasing on (0, inf)."""
    return math.copysign(1.0, xi - SYMMETRIC_POINT) * F(xi, cfg, rule)


def _f_derivative(x: float) -> float:
    return -signed_cuberoot(circle_speed_cubed(x))


def cfh(
    psi_value: float,
    cfg: QuadratureCfg | None = None,
    branch: Literal["upper", "lower"] = "upper",
) -> float:
    """Inverse of F on one monotone branch; the hyperbolic-cosine analogue.

    The default upper branch returns xi >= 2^(-1/3); branch="lower" inverts
    the decreasing part on (0, 2^(-1/3)].  Bracketed root finding (doubling
    expansion, then Brent) plus a Newton polish with the analytic derivative
    drives |F(xi) - psi_value| below cfg.abs_tol.
    """
    cfg = cfg or DEFAULT_CFG
    if psi_value < 0.0:
        raise OutOfRange(f"F is nonnegative; got target {psi_value!r}")
    if psi_value == 0.0:
        return SYMMETRIC_POINT

    def f(x: float) -> float:
        return F(x, cfg) - psi_value

    if branch == "upper":
        lo, hi = SYMMETRIC_POINT, 2.0
        for _ in range(60):
            if f(hi) >= 0.0:
                break
            lo, hi = hi, hi * 2.0
        else:
            raise OutOfRange(f"target {psi_value!r} not bracketed below xi = {hi!r}")
    elif branch == "lower":
        lo, hi = SYMMETRIC_POINT / 2.0, SYMMETRIC_POINT
        for _ in range(60):
            if f(lo) >= 0.0:
                break
            if lo <= LOWER_BRANCH_FLOOR:
                raise OutOfRange(f"target {psi_value!r} beyond the lower-branch range")
            lo, hi = max(lo / 2.0, LOWER_BRANCH_FLOOR), lo
        else:
            raise OutOfRange(f"target {psi_value!r} not bracketed above xi = {lo!r}")
    else:
        raise ValueError(f"unknown branch {branch!r}")

    root = float(brentq(f, lo, hi, xtol=1e-14, maxiter=200))
    for _ in range(3):
        r = F(root, cfg) - psi_value
        if abs(r) <= cfg.abs_tol:
            break
        d = _f_derivative(root)
        if d == 0.0:
            break
        root -= r / d
    return root


@dataclass(frozen=True)
class RelBingle:
    """Relative bingle value with the unit-circle component it lives on."""

    value: float
    component: ComponentLabel


# Parametrizing director per component: the traversal parameter of component
# 3 is q1 and of component 2 is q3, both positive there by the sign
# structure; on component 1 the traversal parameter is q2, whose positive
# value is -q2 for directions classified there.
_PARAM_INDEX = {"3": 0, "2": 2, "1": 1}
_PARAM_SIGN = {"3": 1.0, "2": 1.0, "1": -1.0}


def psi(a: Poly3, b: Poly3, cfg: QuadratureCfg | None = None) -> RelBingle:
    """Relative bingle of the pair (a, b) on its unit-circle component.

    Classifies the component from the director signs and the sign of the
    connecting arclength, then evaluates F at the component's positive
    parametrizing director.
    """
    q, s_star = _directors(a, b)
    label = classify(q, 1 if s_star > 0.0 else -1)
    comp = label[0]
    param = _PARAM_SIGN[comp] * q[_PARAM_INDEX[comp]]
    if param <= 0.0:
        raise DomainError(f"parametrizing director {param!r} not positive on {label}")
    return RelBingle(value=F(param, cfg), component=label)


def cfh_triple_from_pair(a: Poly3, b: Poly3) -> tuple[float, float, float]:
    """Negated directors of (a, b): sum 0 and product exactly 1 in algebra."""
    q1, q2, q3 = directors(a, b)
    return (-q1, -q2, -q3)


@dataclass(frozen=True)
class TrigValues:
    """Products and ratios of a cfh triple (sine/tangent/cotangent analogues)."""

    sfh: tuple[float, float, float]
    tfh: tuple[float, float, float]
    ctfh: tuple[float, float, float]


def trig(cfh1: float, cfh2: float, cfh3: float) -> TrigValues:
    """sfh_i = cfh_j * cfh_k, tfh_i = sfh_i/cfh_i, ctfh_i = 1/tfh_i."""
    c = (cfh1, cfh2, cfh3)
    if any(x == 0.0 for x in c):
        raise ZeroCosine(f"zero cfh value in {c!r}")
    sfh = (c[1] * c[2], c[0] * c[2], c[0] * c[1])
    tfh = (sfh[0] / c[0], sfh[1] / c[1], sfh[2] / c[2])
    ctfh = (1.0 / tfh[0], 1.0 / tfh[1], 1.0 / tfh[2])
    return TrigValues(sfh=sfh, tfh=tfh, ctfh=ctfh)


@dataclass(frozen=True)
class ConnectCheck:
    """Comparison of the angle-ratio identities against the second projection.

    ratios are x_i/scbrt(x1*x2*x3) for the angle triple x of the input; for
    a trace-free triple exactly one ratio is positive, so the all-positive
    domain is empty and domain_restricted is always True in practice.
    residuals holds |ratio - exp(second projection)| where the ratio is
    positive (None elsewhere); abs_residuals compares absolute values and
    vanishes identically; convention records, per component, which sign
    convention of the cosine analogue produces the positive value.
    """

    domain_restricted: bool
    ratios: tuple[float, float, float]
    residuals: tuple[float | None, float | None, float | None]
    abs_residuals: tuple[float, float, float]
    convention: tuple[str, str, str]


def check_connect(a: Poly3, null_tol: float = 1e-12) -> ConnectCheck:
    """Check the identity between angle ratios and the second projection.

    Requires all exponential angles of a to be nonzero (within null_tol).
    """
    u = biproject(a)
    if any(abs(x) <= null_tol for x in u):
        raise NullComponent(f"zero exponential angle in {u.as_tuple()}")
    s = signed_cuberoot(u.x1 * u.x2 * u.x3)
    ratios = (u.x1 / s, u.x2 / s, u.x3 / s)
    ex = tuple(math.exp(v) for v in second_biproject(u))
    residuals = tuple(
        (abs(r - e) if r > 0.0 else None) for r, e in zip(ratios, ex)
    )
    abs_residuals = tuple(abs(abs(r) - e) for r, e in zip(ratios, ex))
    convention = tuple("minus" if r > 0.0 else "plus" for r in ratios)
    return ConnectCheck(
        domain_restricted=not all(r > 0.0 for r in ratios),
        ratios=ratios,
        residuals=residuals,  # type: ignore[arg-type]
        abs_residuals=abs_residuals,  # type: ignore[arg-type]
        convention=convention,  # type: ignore[arg-type]
    )
