"""Shared deterministic samplers for the test suite."""

from __future__ import annotations

import math

import numpy as np
import pytest

from bm3 import BingleVec, Geodesic, Poly3, biproject, q2_principal, reconstruct


def rand_octant(rng: np.random.Generator, spread: float = 1.2) -> Poly3:
    c = np.exp(rng.uniform(-spread, spread, size=3))
    return Poly3(float(c[0]), float(c[1]), float(c[2]))


def rand_nondegenerate(rng: np.random.Generator) -> Poly3:
    mags = np.exp(rng.uniform(-1.0, 1.0, size=3))
    signs = rng.choice([-1.0, 1.0], size=3)
    return Poly3(*(float(m * s) for m, s in zip(mags, signs)))


def rand_flat(rng: np.random.Generator, min_component: float = 0.05) -> BingleVec:
    while True:
        d1, d2 = rng.uniform(-1.5, 1.5, size=2)
        d3 = -(d1 + d2)
        if min(abs(d1), abs(d2), abs(d3)) >= min_component:
            return BingleVec(float(d1), float(d2), float(d3))


def rand_separated_pair(rng: np.random.Generator) -> tuple[Poly3, Poly3]:
    """First-octant pair whose angle difference is bounded away from null."""
    a = rand_octant(rng)
    d = rand_flat(rng)
    ub = biproject(a) + d
    nb = float(np.exp(rng.uniform(-1.0, 1.0)))
    return a, reconstruct(nb, BingleVec(ub.x1, ub.x2, ub.x3))


def rand_geodesic(rng: np.random.Generator, branches: bool = True) -> Geodesic:
    a1, a2 = np.exp(rng.uniform(-1.0, 1.0, size=2))
    p1 = float(np.exp(rng.uniform(math.log(0.25), math.log(2.5))))
    p2 = q2_principal(p1)
    branch = rng.integers(0, 3) if branches else 0
    if branch == 0:
        q1, q2 = p1, p2
    elif branch == 1:
        q1, q2 = -(p1 + p2), p2
    else:
        q1, q2 = p1, -(p1 + p2)
    return Geodesic(float(a1), float(a2), q1, q2)


def rand_triangle(rng: np.random.Generator, box: float = 0.9) -> tuple[Poly3, Poly3, Poly3]:
    """Non-degenerate triangle with one vertex on the unit ray."""
    while True:
        ub = rng.uniform(-box, box, size=2)
        uc = rng.uniform(-box, box, size=2)
        if abs(ub[0] * uc[1] - ub[1] * uc[0]) < 0.02:
            continue
        a = Poly3(1.0, 1.0, 1.0)
        b = Poly3(math.exp(ub[0]), math.exp(ub[1]), math.exp(-ub[0] - ub[1]))
        c = Poly3(math.exp(uc[0]), math.exp(uc[1]), math.exp(-uc[0] - uc[1]))
        return a, b, c


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)
