"""Exception hierarchy.

Validation errors (bad inputs, domain violations) carry exit code 2 for the
CLI; numerical failures (quadrature, root finding) carry exit code 1.
"""

from __future__ import annotations


class BM3Error(Exception):
    """Base class for all library errors."""

    exit_code = 2


class DegenerateDivisor(BM3Error):
    """Division by an element with a zero component."""


class OutOfOctant(BM3Error):
    """Operation requires a strictly first-octant vector (all components > 0)."""


class NullComponent(BM3Error):
    """An angle triple has a (near-)zero component where a nonzero one is required."""


class NonPositiveNorm(BM3Error):
    """A norm argument must be strictly positive."""


class NonZeroTrace(BM3Error):
    """An angle triple must have zero component sum."""


class NotOrthogonal(BM3Error):
    """The scaling triple is not Euclid-orthogonal to the angle triple."""


class NonPositive(BM3Error):
    """Argument must be strictly positive."""


class CoincidentPoints(BM3Error):
    """The two unit points coincide; no connecting geodesic is defined."""


class NullSeparated(BM3Error):
    """The two points are separated along a null direction (zero log product)."""


class Ambiguous(BM3Error):
    """A direction triple sits on a component boundary (zero director)."""


class DomainError(BM3Error):
    """Value falls outside the real domain of the requested quantity."""


class ZeroCosine(BM3Error):
    """Trigonometric record undefined for a zero cfh value."""


class ComplexRoots(BM3Error):
    """The recovery cubic has a negative discriminant (complex roots)."""


class NotCoplanar(BM3Error):
    """Inputs violate the metric-coplanarity precondition."""


class DegeneratePair(BM3Error):
    """Two of the projected points coincide; the residual is undefined."""


class DegenerateDenominator(BM3Error):
    """The edge-intersection formula has a vanishing denominator."""


class NumericalError(BM3Error):
    """Base class for runtime numerical failures."""

    exit_code = 1


class QuadratureFailure(NumericalError):
    """Adaptive quadrature exceeded its depth budget before converging."""


class OutOfRange(NumericalError):
    """Root bracketing could not enclose the requested value."""
