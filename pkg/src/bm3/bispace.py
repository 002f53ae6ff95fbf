"""Log-projection onto the two-dimensional space of exponential angles.

A strictly positive triple a collapses, along its ray, to the trace-free
triple of exponential angles x_i = ln(a_i) - mean(ln a).  That flat space
carries the same cubic norm as the original space, and the original vector is
recovered from its norm and angle triple by componentwise exponentials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .algebra import Poly3, exp3
from .errors import (
    NonPositiveNorm,
    NonZeroTrace,
    NotOrthogonal,
    NullComponent,
    OutOfOctant,
)

#: Absolute tolerance for the zero-trace invariant at API boundaries.
TRACE_TOL = 1e-12


@dataclass(frozen=True)
class BingleVec:
    """Triple of exponential angles; members of the flat space sum to zero.

    The type itself only requires finite fields.  Triples with nonzero trace
    are representable (they arise as ambient-space data) but are rejected by
    the operations that require genuine angle triples.
    """

    x1: float
    x2: float
    x3: float

    def __post_init__(self) -> None:
        for x in (self.x1, self.x2, self.x3):
            if not math.isfinite(x):
                raise ValueError(f"components must be finite, got {x!r}")

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2
        yield self.x3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    @property
    def trace(self) -> float:
        return self.x1 + self.x2 + self.x3

    def __add__(self, other: "BingleVec") -> "BingleVec":
        return BingleVec(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "BingleVec") -> "BingleVec":
        return BingleVec(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __rmul__(self, s: float) -> "BingleVec":
        return BingleVec(s * self.x1, s * self.x2, s * self.x3)


def require_first_octant(a: Poly3) -> None:
    if not a.first_octant:
        raise OutOfOctant(f"all components must be > 0, got {a.as_tuple()}")


def require_flat(u: BingleVec) -> None:
    if abs(u.trace) > TRACE_TOL:
        raise NonZeroTrace(f"component sum {u.trace!r} exceeds {TRACE_TOL}")


def biproject(a: Poly3) -> BingleVec:
    """Exponential angles of a first-octant vector; constant along rays.

    Component i is (2 ln a_i - ln a_j - ln a_k)/3, computed as ln a_i minus
    the mean log so the zero-trace identity holds to rounding.
    """
    require_first_octant(a)
    l1, l2, l3 = math.log(a.c1), math.log(a.c2), math.log(a.c3)
    m = (l1 + l2 + l3) / 3.0
    return BingleVec(l1 - m, l2 - m, l3 - m)


def bm_norm_flat(u: BingleVec) -> float:
    """Cubic norm |u1*u2*u3|^(1/3) carried by the flat angle space."""
    return abs(u.x1 * u.x2 * u.x3) ** (1.0 / 3.0)


def second_biproject(u: BingleVec) -> BingleVec:
    """Angle triple of an angle triple, via component absolute values.

    Signs of the u_i are dropped (they are recorded by the caller as an
    octant label); a zero component has no logarithm and is rejected.
    """
    for x in u:
        if abs(x) <= 1e-300:
            raise NullComponent(f"zero component in {u.as_tuple()}")
    l1, l2, l3 = math.log(abs(u.x1)), math.log(abs(u.x2)), math.log(abs(u.x3))
    m = (l1 + l2 + l3) / 3.0
    return BingleVec(l1 - m, l2 - m, l3 - m)


def reconstruct(n: float, u: BingleVec) -> Poly3:
    """Rebuild the vector with norm n and angle triple u: n * exp3(u)."""
    if n <= 0.0:
        raise NonPositiveNorm(f"norm must be > 0, got {n!r}")
    require_flat(u)
    return Poly3(n * math.exp(u.x1), n * math.exp(u.x2), n * math.exp(u.x3))


def double_exp_reconstruct(n: float, phi: float, w: BingleVec) -> Poly3:
    """Doubly exponential form n * exp3(phi * exp3(w)).

    w is a second-level angle triple (trace-free); the inner exponent
    phi * exp3(w) is generally not trace-free, so the result's norm is not n
    in general.
    """
    if n <= 0.0:
        raise NonPositiveNorm(f"norm must be > 0, got {n!r}")
    require_flat(w)
    inner = exp3(Poly3(w.x1, w.x2, w.x3))
    return Poly3(
        n * math.exp(phi * inner.c1),
        n * math.exp(phi * inner.c2),
        n * math.exp(phi * inner.c3),
    )


def homothety_to_translation(alpha: Poly3) -> BingleVec:
    """Translation of the angle space induced by componentwise scaling.

    Scaling a first-octant vector componentwise by alpha shifts its angle
    triple by this value; the formula coincides with biproject(alpha).
    """
    return biproject(alpha)


def apply_nonlinear(u: BingleVec, lam: tuple[float, float, float]) -> BingleVec:
    """Componentwise rescaling (l1*u1, l2*u2, l3*u3) of an angle triple.

    Requires Euclid-orthogonality sum(l_i*u_i) = 0, which is exactly the
    condition that the image is again trace-free.  Invertible when all l_i
    are nonzero; preserves the cubic norm when additionally l1*l2*l3 = 1.
    """
    l1, l2, l3 = lam
    if abs(l1 * u.x1 + l2 * u.x2 + l3 * u.x3) > TRACE_TOL:
        raise NotOrthogonal(
            f"sum(lam_i*u_i) = {l1 * u.x1 + l2 * u.x2 + l3 * u.x3!r} exceeds {TRACE_TOL}"
        )
    return BingleVec(l1 * u.x1, l2 * u.x2, l3 * u.x3)
