"""The first-octant unit surface x1*x2*x3 = 1, its metric and extremals.

In the chart (x1, x2) the induced cubic line element is
v1^2*v2/(x1^2*x2) + v2^2*v1/(x1*x2^2); its signed cube root integrates to
arclength.  Extremals are exponential in arclength, x_i = a_i*exp(q_i*s),
with exponents constrained by q1*q2*(q1+q2) = 1 so that the parametrization
is natural (unit speed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal, Union

from .algebra import Poly3, norm, signed_cuberoot
from .bispace import require_first_octant
from .errors import CoincidentPoints, NonPositive, NullSeparated, OutOfOctant
from .quadrature import DEFAULT_CFG, QuadratureCfg, Rule, integrate

#: Relative tolerance for the unit-product invariant of surface points.
UNIT_TOL = 1e-12

#: Relative tolerance for the exponent constraint of geodesics.
CONSTRAINT_TOL = 1e-10

Chart = Literal["12", "13", "23"]


@dataclass(frozen=True)
class UnitPoint:
    """Point on the first-octant component of the unit surface."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self) -> None:
        if not (self.x1 > 0.0 and self.x2 > 0.0 and self.x3 > 0.0):
            raise ValueError(f"components must be > 0, got {self.as_tuple()}")
        p = self.x1 * self.x2 * self.x3
        if abs(p - 1.0) > UNIT_TOL:
            raise ValueError(f"component product {p!r} is not 1 within {UNIT_TOL}")

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2
        yield self.x3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def as_poly3(self) -> Poly3:
        return Poly3(self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class Geodesic:
    """Extremal x1 = a1*exp(q1*s), x2 = a2*exp(q2*s), x3 by reciprocity."""

    a1: float
    a2: float
    q1: float
    q2: float

    def __post_init__(self) -> None:
        if not (self.a1 > 0.0 and self.a2 > 0.0):
            raise ValueError(f"base point must be positive, got ({self.a1!r}, {self.a2!r})")
        c = self.q1 * self.q2 * (self.q1 + self.q2)
        if abs(c - 1.0) > CONSTRAINT_TOL:
            raise ValueError(f"exponent constraint violated: q1*q2*(q1+q2) = {c!r}")

    @property
    def base(self) -> UnitPoint:
        return UnitPoint(self.a1, self.a2, 1.0 / (self.a1 * self.a2))


def unit_point(a: Poly3) -> UnitPoint:
    """Radial projection of a first-octant vector onto the unit surface."""
    require_first_octant(a)
    n = norm(a)
    return UnitPoint(a.c1 / n, a.c2 / n, a.c3 / n)


def q2_principal(q1: float) -> float:
    """Positive companion exponent with q1*q2*(q1+q2) = 1, for q1 > 0.

    Uses the rationalized form 2/(sqrt(q1^4+4*q1) + q1^2), which is free of
    cancellation for large q1 (the textbook difference form loses digits).
    """
    if q1 <= 0.0:
        raise NonPositive(f"principal branch needs q1 > 0, got {q1!r}")
    return 2.0 / (math.sqrt(q1**4 + 4.0 * q1) + q1 * q1)


def geodesic_eval(g: Geodesic, s: float) -> UnitPoint:
    """Point of the extremal at arclength parameter s."""
    x1 = g.a1 * math.exp(g.q1 * s)
    x2 = g.a2 * math.exp(g.q2 * s)
    return UnitPoint(x1, x2, 1.0 / (x1 * x2))


def geodesic_between(a: UnitPoint, b: UnitPoint) -> tuple[Geodesic, float]:
    """Extremal from a to b and the (signed) parameter s at which it hits b.

    The logs l_i = ln(b_i/a_i) determine s as the signed cube root of
    l1*l2*(l1+l2); a zero product with distinct points means the pair is
    separated along a null direction of the flat angle space and no
    constraint-satisfying extremal exists.
    """
    l1 = math.log(b.x1 / a.x1)
    l2 = math.log(b.x2 / a.x2)
    if l1 == 0.0 and l2 == 0.0:
        raise CoincidentPoints(f"{a.as_tuple()} and {b.as_tuple()} coincide")
    p = l1 * l2 * (l1 + l2)
    if p == 0.0:
        raise NullSeparated(f"log triple ({l1!r}, {l2!r}, {-l1 - l2!r}) has zero product")
    s_star = signed_cuberoot(p)
    return Geodesic(a.x1, a.x2, l1 / s_star, l2 / s_star), s_star


@dataclass(frozen=True)
class Point:
    """Geodesics meet in exactly one point."""

    point: UnitPoint


@dataclass(frozen=True)
class Parallel:
    """Same exponents, disjoint traces."""


@dataclass(frozen=True)
class Identical:
    """Same trace as point sets."""


IntersectResult = Union[Point, Parallel, Identical]


def intersect(g: Geodesic, h: Geodesic) -> IntersectResult:
    """Classify the intersection of two extremals.

    With distinct exponent pairs the linear system in the two arclength
    parameters has a unique solution; with equal exponents the geodesics are
    the same curve when h's base point lies on g, else disjoint.
    """
    r1 = math.log(h.a1 / g.a1)
    r2 = math.log(h.a2 / g.a2)
    det = h.q1 * g.q2 - g.q1 * h.q2
    scale = max(abs(h.q1 * g.q2), abs(g.q1 * h.q2))
    if abs(det) > 1e-12 * scale:
        s = (h.q1 * r2 - h.q2 * r1) / det
        return Point(geodesic_eval(g, s))
    # equal exponents (the constraint forces q == q-bar when det == 0):
    # h's base lies on g iff r is proportional to (q1, q2)
    member = g.q2 * r1 - g.q1 * r2
    member_scale = max(abs(g.q2 * r1), abs(g.q1 * r2), 1.0)
    if abs(member) <= 1e-10 * member_scale:
        return Identical()
    return Parallel()


def unit_circle_point(q1: float, radius_sign: int, component: Chart = "12") -> UnitPoint:
    """Point of the unit geodesic circle centred at (1,1,1).

    The chart names the coordinate pair carrying the exponentials e^{+-q1},
    e^{+-q2} (q2 on the principal branch); the remaining coordinate is the
    reciprocal of their product.  Every output is at geodesic distance 1 from
    (1,1,1); radius_sign selects which of the two radius-1 points along the
    direction is taken.
    """
    q2 = q2_principal(q1)  # raises NonPositive for q1 <= 0
    if radius_sign not in (1, -1):
        raise ValueError(f"radius_sign must be +1 or -1, got {radius_sign!r}")
    e1 = math.exp(radius_sign * q1)
    e2 = math.exp(radius_sign * q2)
    rec = 1.0 / (e1 * e2)
    if component == "12":
        return UnitPoint(e1, e2, rec)
    if component == "13":
        return UnitPoint(e1, rec, e2)
    if component == "23":
        return UnitPoint(rec, e1, e2)
    raise ValueError(f"unknown chart {component!r}; expected '12', '13' or '23'")


def metric_eval(x1: float, x2: float, v1: float, v2: float) -> float:
    """Induced cubic form on the tangent (v1, v2) at chart point (x1, x2).

    Normalized so that a constraint-satisfying geodesic velocity evaluates
    to exactly 1; homogeneous of degree 3 in the velocity.
    """
    if not (x1 > 0.0 and x2 > 0.0):
        raise OutOfOctant(f"chart point must be positive, got ({x1!r}, {x2!r})")
    return v1 * v1 * v2 / (x1 * x1 * x2) + v2 * v2 * v1 / (x2 * x2 * x1)


def arclength_numeric(
    g: Geodesic,
    s0: float,
    s1: float,
    cfg: QuadratureCfg | None = None,
    rule: Rule = "kronrod",
) -> float:
    """Arclength of the extremal over [s0, s1] by adaptive quadrature.

    Integrates the signed cube root of the induced cubic form along the
    curve; for a valid Geodesic this reproduces s1 - s0, which is the check
    that the parametrization is natural.
    """
    if s0 > s1:
        raise ValueError(f"need s0 <= s1, got {s0!r} > {s1!r}")
    cfg = cfg or DEFAULT_CFG

    def speed(s: float) -> float:
        x1 = g.a1 * math.exp(g.q1 * s)
        x2 = g.a2 * math.exp(g.q2 * s)
        return signed_cuberoot(metric_eval(x1, x2, g.q1 * x1, g.q2 * x2))

    return integrate(speed, s0, s1, cfg, rule)
