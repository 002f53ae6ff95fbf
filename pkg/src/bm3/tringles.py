"""Invariant areas on the unit surface: the solid-angle analogue.

In the log chart u_i = ln X_i the invariant area form dX1^dX2/(X1*X2)
becomes du1^du2 and extremal edges become straight segments, so the area of
a geodesic triangle is an ordinary shoelace area there.  That exact route is
the primary implementation; an iterated quadrature in the original chart and
a pencil-coordinate integral serve as independent slow routes, and the
closed single-integral formula is shipped literally as a comparison target
only (its prefactors do not re-derive; see the comparison harness).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .algebra import Poly3
from .bingles import COPLANAR_TOL, coplanarity_residual, reciprocal_bingle
from .bispace import biproject
from .errors import (
    DegenerateDenominator,
    DomainError,
    NotCoplanar,
    QuadratureFailure,
)
from .geodesics import q2_principal
from .quadrature import DEFAULT_CFG, QuadratureCfg, integrate
from .relative import _directors


@dataclass(frozen=True)
class CubicForm2:
    """Independent components of a symmetric cubic form in two variables."""

    g111: float
    g112: float
    g122: float
    g222: float

    def component(self, i: int, j: int, k: int) -> float:
        """Component with arbitrary index order (indices are 1-based)."""
        key = "".join(str(n) for n in sorted((i, j, k)))
        return getattr(self, "g" + key)


def cubic_det2(g: CubicForm2) -> float:
    """Paired determinant of the form's two index slices.

    The four-term expansion G111*G222 - G112*G221 + G122*G211 - G121*G212
    collapses under index symmetry to g111*g222 - g112*g122.
    """
    return g.g111 * g.g222 - g.g112 * g.g122


def _det_pair(g: CubicForm2, r: int, s: int) -> float:
    # polarized determinant of slices r and s, by the four-term rule
    return (
        g.component(r, 1, 1) * g.component(s, 2, 2)
        - g.component(r, 1, 2) * g.component(s, 2, 1)
        + g.component(r, 2, 2) * g.component(s, 1, 1)
        - g.component(r, 2, 1) * g.component(s, 1, 2)
    )


def cubic_delta(g: CubicForm2) -> float:
    """Relative scalar of weight -6 attached to the form.

    Determinant of the 2x2 matrix of paired slice determinants, normalized
    (divided by 3) so that the reduced case g111 = g222 = 0 gives exactly
    (g112*g122)^2.
    """
    return (_det_pair(g, 1, 1) * _det_pair(g, 2, 2) - _det_pair(g, 1, 2) * _det_pair(g, 2, 1)) / 3.0


def relative_scalar_v(g: CubicForm2) -> float:
    """Weight -1 relative scalar |delta|^(1/6) building the area density."""
    return abs(cubic_delta(g)) ** (1.0 / 6.0)


def area_density(x1: float, x2: float) -> float:
    """Density of the invariant area form in the (x1, x2) chart: 1/(x1*x2)."""
    if not (x1 > 0.0 and x2 > 0.0):
        raise ValueError(f"chart point must be positive, got ({x1!r}, {x2!r})")
    return 1.0 / (x1 * x2)


def indicatrix_cubic_form(x1: float, x2: float) -> CubicForm2:
    """Symmetric components of the induced cubic metric at a chart point.

    The cubic form v1^2*v2/(x1^2*x2) + v2^2*v1/(x1*x2^2) has symmetric
    components g112 = 1/(3*x1^2*x2), g122 = 1/(3*x1*x2^2), g111 = g222 = 0.
    """
    if not (x1 > 0.0 and x2 > 0.0):
        raise ValueError(f"chart point must be positive, got ({x1!r}, {x2!r})")
    return CubicForm2(
        g111=0.0,
        g112=1.0 / (3.0 * x1 * x1 * x2),
        g122=1.0 / (3.0 * x1 * x2 * x2),
        g222=0.0,
    )


def _chart_vertices(a: Poly3, b: Poly3, c: Poly3) -> list[tuple[float, float]]:
    return [(u.x1, u.x2) for u in (biproject(a), biproject(b), biproject(c))]


def tringle(a: Poly3, b: Poly3, c: Poly3) -> float:
    """Area of the geodesic triangle of the three rays on the unit surface.

    Shoelace area of the projected vertices in the log chart; exact for the
    invariant area form.  The cross terms are combined with math.fsum, so
    cyclic permutations of the arguments give bitwise-identical results.
    """
    p0, p1, p2 = _chart_vertices(a, b, c)
    terms = (
        p0[0] * p1[1] - p0[1] * p1[0],
        p1[0] * p2[1] - p1[1] * p2[0],
        p2[0] * p0[1] - p2[1] * p0[0],
    )
    return 0.5 * abs(math.fsum(terms))


def tringle_quadrature(
    a: Poly3, b: Poly3, c: Poly3, cfg: QuadratureCfg | None = None
) -> float:
    """Independent area evaluation: iterated quadrature in the original chart.

    Slices the triangle region along X1; the X2-section integral of
    1/(X1*X2) is the log-length of the section, and the outer integral over
    X1 (weight 1/X1) is done adaptively strip by strip between vertex
    abscissae.
    """
    cfg = cfg or DEFAULT_CFG
    verts = _chart_vertices(a, b, c)
    edges = []
    for i in range(3):
        (ux0, uy0), (ux1, uy1) = verts[i], verts[(i + 1) % 3]
        if ux0 == ux1:
            continue  # vertical edge: carries no strip width
        slope = (uy1 - uy0) / (ux1 - ux0)
        edges.append((min(ux0, ux1), max(ux0, ux1), uy0 - slope * ux0, slope))

    xs = sorted({v[0] for v in verts})
    total = 0.0
    for lo, hi in zip(xs, xs[1:]):
        if hi - lo <= 0.0:
            continue
        mid = 0.5 * (lo + hi)
        active = [e for e in edges if e[0] <= mid <= e[1]]
        if len(active) < 2:
            continue

        def section(x1: float) -> float:
            u1 = math.log(x1)
            ys = [icpt + slope * u1 for (_, _, icpt, slope) in active]
            return (max(ys) - min(ys)) / x1

        total += integrate(section, math.exp(lo), math.exp(hi), cfg)
    return total


def direction_ratios(a: Poly3, b: Poly3) -> tuple[float, float, float]:
    """Angle differences of the pair divided by the unsigned arclength."""
    q, s_star = _directors(a, b)
    sign = 1.0 if s_star > 0.0 else -1.0
    return (sign * q[0], sign * q[1], sign * q[2])


def s_of_q(
    q: float,
    qbar: float,
    phi_ab: float,
    cfh_bc: tuple[float, float],
    cfh_ab: tuple[float, float],
) -> float:
    """Arclength at which the pencil ray (q, qbar) from vertex a meets edge bc.

    All direction data is given as first-two-component ratio pairs in the
    canonical position (vertex a at the unit); phi_ab is the arclength of
    edge ab.
    """
    num = cfh_bc[1] * cfh_ab[0] - cfh_bc[0] * cfh_ab[1]
    den = cfh_bc[1] * q - cfh_bc[0] * qbar
    scale = max(abs(cfh_bc[1] * q), abs(cfh_bc[0] * qbar), 1e-300)
    if abs(den) <= 1e-14 * scale:
        raise DegenerateDenominator(f"pencil ray parallel to the opposite edge (den={den!r})")
    return phi_ab * num / den


def _triangle_direction_data(a: Poly3, b: Poly3, c: Poly3):
    r_ab = direction_ratios(a, b)
    r_ac = direction_ratios(a, c)
    r_bc = direction_ratios(b, c)
    phi_ab = reciprocal_bingle(a, b)
    return r_ab, r_ac, r_bc, phi_ab


def tringle_closed(
    a: Poly3, b: Poly3, c: Poly3, cfg: QuadratureCfg | None = None
) -> float:
    """Closed single-integral formula for the triangle area, taken literally.

    Comparison target only: its prefactors are known not to reproduce the
    definitional area in general (see compare_tringle_formulas).  Requires
    the pencil parameter range to stay positive so the square roots are
    real.
    """
    cfg = cfg or DEFAULT_CFG
    r_ab, r_ac, r_bc, phi_ab = _triangle_direction_data(a, b, c)
    x_lo, x_hi = r_ab[0], r_ac[0]
    if min(x_lo, x_hi) <= 0.0:
        raise DomainError(
            f"integration range [{x_lo!r}, {x_hi!r}] leaves the real domain"
        )
    pre = 1.5 * phi_ab**2 * (r_bc[0] * r_ab[0] - r_bc[1] * r_ab[1]) ** 2

    def integrand(x: float) -> float:
        root = math.sqrt(x**4 + 4.0 * x)
        inner = x / r_bc[0] - q2_principal(x) / r_bc[1]
        return 1.0 / (root * inner * inner)

    return pre * integrate(integrand, x_lo, x_hi, cfg)


def tringle_pencil(
    a: Poly3, b: Poly3, c: Poly3, cfg: QuadratureCfg | None = None
) -> float:
    """Triangle area integrated in pencil coordinates (independent route).

    Sweeps the pencil of extremals from vertex a, using s_of_q for the edge
    intersection; the area element reduces to
    (3/2) s(q)^2 / sqrt(q^4 + 4q) dq.  Needs both edge directions from a on
    the positive principal branch.
    """
    cfg = cfg or DEFAULT_CFG
    r_ab, r_ac, r_bc, phi_ab = _triangle_direction_data(a, b, c)
    x_lo, x_hi = r_ab[0], r_ac[0]
    if min(x_lo, x_hi) <= 0.0:
        raise DomainError(
            f"pencil parameter range [{x_lo!r}, {x_hi!r}] leaves the principal branch"
        )
    bc = (r_bc[0], r_bc[1])
    ab = (r_ab[0], r_ab[1])

    def integrand(x: float) -> float:
        s = s_of_q(x, q2_principal(x), phi_ab, bc, ab)
        return 1.5 * s * s / math.sqrt(x**4 + 4.0 * x)

    return abs(integrate(integrand, x_lo, x_hi, cfg))


def check_tringle_additivity(
    a: Poly3, b: Poly3, c: Poly3, d: Poly3, tol: float = COPLANAR_TOL
) -> float:
    """Area-additivity defect for a fourth ray on an edge line of (a, b, c).

    With d on the line of (a, c): returns T(a,b,c) + T(b,c,d) - T(a,b,d);
    with d on the line of (a, b): returns T(a,b,c) + T(b,c,d) - T(a,c,d).
    """
    if coplanarity_residual(a, c, d) <= tol:
        return tringle(a, b, c) + tringle(b, c, d) - tringle(a, b, d)
    if coplanarity_residual(a, b, d) <= tol:
        return tringle(a, b, c) + tringle(b, c, d) - tringle(a, c, d)
    raise NotCoplanar("d is on neither the (a,c) nor the (a,b) edge line")


def compare_tringle_formulas(
    n_cases: int = 120,
    seed: int = 20240801,
    cfg: QuadratureCfg | None = None,
    agree_tol: float = 1e-6,
) -> list[dict[str, Any]]:
    """Comparison harness for the closed formula against the exact area.

    Samples non-degenerate triangles with vertex a at the unit and both
    other vertices in the positive log quadrant (so the closed formula's
    square roots are real), and classifies every case as "agree"
    (relative difference <= agree_tol), "disagree", or "error".  Each row
    logs the inputs and, as a diagnostic, the pencil-coordinate area, which
    isolates whether a discrepancy sits in the prefactors or the sweep.
    """
    cfg = cfg or DEFAULT_CFG
    rng = np.random.default_rng(seed)
    unit = Poly3(1.0, 1.0, 1.0)
    rows: list[dict[str, Any]] = []
    while len(rows) < n_cases:
        ub = rng.uniform(0.3, 1.4, size=2)
        uc = rng.uniform(0.3, 1.4, size=2)
        d1, d2 = uc[0] - ub[0], uc[1] - ub[1]
        if min(abs(d1), abs(d2), abs(d1 + d2)) < 0.05:
            continue
        if abs(ub[0] * uc[1] - ub[1] * uc[0]) < 0.02:
            continue  # nearly collinear with the unit vertex
        b = Poly3(math.exp(ub[0]), math.exp(ub[1]), math.exp(-ub[0] - ub[1]))
        c = Poly3(math.exp(uc[0]), math.exp(uc[1]), math.exp(-uc[0] - uc[1]))
        area = tringle(unit, b, c)
        row: dict[str, Any] = {
            "case": len(rows),
            "u_b": (ub[0], ub[1]),
            "u_c": (uc[0], uc[1]),
            "area": area,
        }
        try:
            closed = tringle_closed(unit, b, c, cfg)
            rel = abs(closed - area) / area
            row["closed"] = closed
            row["rel_diff"] = rel
            row["classification"] = "agree" if rel <= agree_tol else "disagree"
        except (DomainError, DegenerateDenominator, QuadratureFailure) as exc:
            row["closed"] = None
            row["rel_diff"] = None
            row["classification"] = "error"
            row["error"] = f"{type(exc).__name__}: {exc}"
        try:
            row["pencil"] = tringle_pencil(unit, b, c, cfg)
        except (DomainError, DegenerateDenominator, QuadratureFailure) as exc:
            row["pencil"] = None
            row.setdefault("error", f"{type(exc).__name__}: {exc}")
        rows.append(row)
    return rows
