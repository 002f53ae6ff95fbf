"""Commutative-associative triple algebra with componentwise product.

Elements are triples in the isotropic basis, where multiplication acts
componentwise and the basis vectors are idempotent (e_i e_j = 0 for i != j).
The quasi-norm |a1*a2*a3|^(1/3) is multiplicative and vanishes exactly on the
degenerate set (triples with a zero component).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import DegenerateDivisor

ConjKind = Literal["dagger", "ddagger"]


def signed_cuberoot(x: float) -> float:
    """Real cube root preserving sign: signed_cuberoot(-8) == -2."""
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


@dataclass(frozen=True)
class Poly3:
    """Algebra element: a real triple in the isotropic basis."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        for c in (self.c1, self.c2, self.c3):
            if not math.isfinite(c):
                raise ValueError(f"components must be finite, got {c!r}")

    def __iter__(self) -> Iterator[float]:
        yield self.c1
        yield self.c2
        yield self.c3

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c1, self.c2, self.c3)

    @property
    def degenerate(self) -> bool:
        """True when a component vanishes (zero-divisor set)."""
        return self.c1 == 0.0 or self.c2 == 0.0 or self.c3 == 0.0

    @property
    def first_octant(self) -> bool:
        return self.c1 > 0.0 and self.c2 > 0.0 and self.c3 > 0.0

    def __mul__(self, other: "Poly3") -> "Poly3":
        return mul(self, other)

    def __truediv__(self, other: "Poly3") -> "Poly3":
        return div(self, other)


#: Unit element of the algebra.
UNIT = Poly3(1.0, 1.0, 1.0)

#: Isotropic basis vectors (each is degenerate).
E1 = Poly3(1.0, 0.0, 0.0)
E2 = Poly3(0.0, 1.0, 0.0)
E3 = Poly3(0.0, 0.0, 1.0)


def mul(a: Poly3, b: Poly3) -> Poly3:
    """Componentwise product; commutative and associative with unit UNIT."""
    return Poly3(a.c1 * b.c1, a.c2 * b.c2, a.c3 * b.c3)


def div(a: Poly3, b: Poly3) -> Poly3:
    """Componentwise quotient, defined only for non-degenerate divisors."""
    if b.degenerate:
        raise DegenerateDivisor(f"divisor has a zero component: {b.as_tuple()}")
    return Poly3(a.c1 / b.c1, a.c2 / b.c2, a.c3 / b.c3)


def conj(a: Poly3, kind: ConjKind) -> Poly3:
    """Cyclic conjugation; applying the same kind three times is the identity.

    kind="dagger" maps (a1,a2,a3) -> (a3,a1,a2); kind="ddagger" maps to
    (a2,a3,a1).  Both are algebra automorphisms.
    """
    if kind == "dagger":
        return Poly3(a.c3, a.c1, a.c2)
    if kind == "ddagger":
        return Poly3(a.c2, a.c3, a.c1)
    raise ValueError(f"unknown conjugation kind: {kind!r}")


def norm(a: Poly3) -> float:
    """Multiplicative quasi-norm |a1*a2*a3|^(1/3); zero on degenerate triples."""
    return abs(a.c1 * a.c2 * a.c3) ** (1.0 / 3.0)


def exp3(a: Poly3) -> Poly3:
    """Componentwise exponential; turns addition of exponents into mul."""
    return Poly3(math.exp(a.c1), math.exp(a.c2), math.exp(a.c3))


def _canonical_product(x: float, y: float, z: float) -> float:
    # multiply in sorted order so the value depends only on the factor multiset
    lo, mid, hi = sorted((x, y, z))
    return (lo * mid) * hi


def scalar3(a: Poly3, b: Poly3, c: Poly3) -> float:
    """Totally symmetric 3-scalar product: permanent of the matrix (a; b; c).

    Each permutation term is multiplied in a canonical factor order and the
    terms are summed with math.fsum, so the 6-fold permutation symmetry is
    exact in floating point, not just up to rounding.
    """
    ra, rb, rc = a.as_tuple(), b.as_tuple(), c.as_tuple()
    terms = [
        _canonical_product(ra[i], rb[j], rc[k])
        for (i, j, k) in (
            (0, 1, 2),
            (0, 2, 1),
            (1, 0, 2),
            (1, 2, 0),
            (2, 0, 1),
            (2, 1, 0),
        )
    ]
    return math.fsum(terms)
