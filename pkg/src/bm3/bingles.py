"""Reciprocal bingles: additive, conformally invariant angles between rays.

The bingle of two first-octant vectors is the cubic norm of the difference
of their angle triples, equal to the arclength of the unit-surface extremal
between their unit points.  Three rays are metrically coplanar when their
angle triples are collinear; on coplanar, ordered triples the bingle is
additive.  The section on invariants recovers the component ratios (and from
them the bingle) out of three symmetric-function invariants of a vector
pair, the cubic-equation analogue of recovering an angle from its cosine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Poly3, norm, scalar3, signed_cuberoot
from .bispace import BingleVec, biproject, bm_norm_flat, require_first_octant
from .errors import ComplexRoots, DegeneratePair, DomainError, NotCoplanar

#: Normalized coplanarity residual below which a triple counts as coplanar.
COPLANAR_TOL = 1e-9


def reciprocal_bingle(a: Poly3, b: Poly3) -> float:
    """Angle between the rays of a and b: |prod_i (xA_i - xB_i)|^(1/3).

    Symmetric, zero iff the rays coincide, invariant under positive scaling
    of either argument and under unimodular componentwise dilations applied
    to both.
    """
    return bm_norm_flat(biproject(a) - biproject(b))


def _cross(u: tuple[float, float, float], v: tuple[float, float, float]) -> tuple[float, float, float]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _euclid(u: tuple[float, float, float]) -> float:
    return math.sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2])


def coplanarity_residual(a: Poly3, b: Poly3, c: Poly3) -> float:
    """Scale-free collinearity defect of the three projected angle triples.

    Zero exactly when the unit points of a, b, c lie on one extremal of the
    unit surface.  Computed as |d1 x d2| / (|d1| |d2|) with d1, d2 the
    Euclidean difference vectors of the angle triples.
    """
    ua, ub, uc = biproject(a), biproject(b), biproject(c)
    d1 = (ua - ub).as_tuple()
    d2 = (ua - uc).as_tuple()
    n1, n2 = _euclid(d1), _euclid(d2)
    if n1 == 0.0 or n2 == 0.0:
        raise DegeneratePair("two of the projected points coincide")
    return _euclid(_cross(d1, d2)) / (n1 * n2)


def check_additivity(a: Poly3, b: Poly3, c: Poly3, tol: float = COPLANAR_TOL) -> float:
    """Additivity defect phi[a,c] - phi[a,b] - phi[b,c] for a coplanar triple.

    Requires the projected point of b to lie between those of a and c on
    their common line; raises NotCoplanar when the collinearity or the
    betweenness precondition fails.  A middle point coinciding with either
    end is trivially between and short-circuits the collinearity check.
    """
    ua, ub, uc = biproject(a), biproject(b), biproject(c)
    d_ab = (ub - ua).as_tuple()
    d_bc = (uc - ub).as_tuple()
    d_ac = (uc - ua).as_tuple()
    span = sum(x * x for x in d_ac)
    if span == 0.0:
        raise NotCoplanar("a and c project to the same point")
    if any(x != 0.0 for x in d_ab) and any(x != 0.0 for x in d_bc):
        if coplanarity_residual(a, b, c) > tol:
            raise NotCoplanar(f"coplanarity residual exceeds {tol}")
        t = sum(x * y for x, y in zip(d_ab, d_ac)) / span
        if t < -1e-12 or t > 1.0 + 1e-12:
            raise NotCoplanar(f"middle point parameter {t!r} outside [0, 1]")
    return reciprocal_bingle(a, c) - reciprocal_bingle(a, b) - reciprocal_bingle(b, c)


@dataclass(frozen=True)
class Invariants:
    """Symmetric-function invariants of an ordered pair of rays.

    With xi_i = b_i/a_i and elementary symmetric functions e1, e2, e3 of the
    xi, the fields are i1 = e1/e3^(1/3), i2 = e2/e3^(2/3) (both invariant
    under scaling either vector) and i3 = e3 = (|b|/|a|)^3.
    """

    i1: float
    i2: float
    i3: float


def invariants(a: Poly3, b: Poly3) -> Invariants:
    """Invariants of the pair (a, b); first-octant arguments only."""
    require_first_octant(a)
    require_first_octant(b)
    x1, x2, x3 = b.c1 / a.c1, b.c2 / a.c2, b.c3 / a.c3
    e1 = x1 + x2 + x3
    e2 = x1 * x2 + x2 * x3 + x1 * x3
    e3 = x1 * x2 * x3
    r = e3 ** (1.0 / 3.0)
    return Invariants(e1 / r, e2 / (r * r), e3)


def invariants_raw(a: Poly3, b: Poly3) -> tuple[float, float, float]:
    """Cross-check quantities from the 3-scalar product.

    Returns ((a,a,b)/(2|a|^2|b|), (a,b,b)/(2|a||b|^2), |a|/|b|); the first
    two reproduce i1 and i2 of invariants(), the third is i3^(-1/3).
    """
    require_first_octant(a)
    require_first_octant(b)
    na, nb = norm(a), norm(b)
    r1 = 0.5 * scalar3(a, a, b) / (na * na * nb)
    r2 = 0.5 * scalar3(a, b, b) / (na * nb * nb)
    return (r1, r2, na / nb)


def _real_cubic_roots(e1: float, e2: float, e3: float) -> tuple[float, float, float]:
    """Real roots of x^3 - e1 x^2 + e2 x - e3, requiring all three real.

    Trigonometric form for the generic case, with an exact shortcut for the
    triple root (where root extraction from coefficients is ill-conditioned)
    and a Newton polish for tightness.
    """
    p = e2 - e1 * e1 / 3.0
    q = -2.0 * e1**3 / 27.0 + e1 * e2 / 3.0 - e3
    disc = -4.0 * p**3 - 27.0 * q * q
    if disc < 0.0:
        raise ComplexRoots(f"negative cubic discriminant {disc!r}")
    shift = e1 / 3.0
    if p == 0.0:
        # disc >= 0 forces q == 0: triple root
        return (shift, shift, shift)
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    arg = min(1.0, max(-1.0, arg))
    theta = math.acos(arg)

    def residual(x: float) -> float:
        return ((x - e1) * x + e2) * x - e3

    roots = []
    for k in range(3):
        x = m * math.cos((theta - 2.0 * math.pi * k) / 3.0) + shift
        f = residual(x)
        for _ in range(2):
            fp = (3.0 * x - 2.0 * e1) * x + e2
            if fp == 0.0:
                break
            step = x - f / fp
            fs = residual(step)
            if abs(fs) >= abs(f):  # near-multiple root: keep the trig value
                break
            x, f = step, fs
        roots.append(x)
    roots.sort()
    return (roots[0], roots[1], roots[2])


def xi_from_invariants(inv: Invariants) -> tuple[float, float, float]:
    """Recover the component-ratio multiset from the invariants.

    The ratios are the roots of x^3 - e1 x^2 + e2 x - e3 with
    e1 = i1*i3^(1/3), e2 = i2*i3^(2/3), e3 = i3; returned sorted ascending.
    """
    r = signed_cuberoot(inv.i3)
    return _real_cubic_roots(inv.i1 * r, inv.i2 * r * r, inv.i3)


def bingle_from_invariants(inv: Invariants) -> float:
    """Reciprocal bingle of the generating pair, out of its invariants alone."""
    roots = xi_from_invariants(inv)
    if any(x <= 0.0 for x in roots):
        raise DomainError(f"recovered ratios {roots} are not all positive")
    l1, l2, l3 = (math.log(x) for x in roots)
    m = (l1 + l2 + l3) / 3.0
    return bm_norm_flat(BingleVec(l1 - m, l2 - m, l3 - m))
