"""Algebra operations: worked examples and structural laws."""

from __future__ import annotations

import math
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bm3 import (
    E1,
    E2,
    E3,
    UNIT,
    DegenerateDivisor,
    Poly3,
    conj,
    div,
    exp3,
    mul,
    norm,
    scalar3,
    signed_cuberoot,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
nonzero = finite.filter(lambda x: abs(x) > 1e-6)
triples = st.tuples(finite, finite, finite).map(lambda t: Poly3(*t))
nondegenerate = st.tuples(nonzero, nonzero, nonzero).map(lambda t: Poly3(*t))


class TestMul:
    def test_unit_element(self):
        assert mul(UNIT, Poly3(1, 2, 3)) == Poly3(1, 2, 3)

    def test_basis_idempotents_annihilate(self):
        assert mul(E1, E2) == Poly3(0, 0, 0)
        assert mul(E1, E1) == E1
        assert mul(E2, E3) == Poly3(0, 0, 0)

    def test_componentwise(self):
        assert mul(Poly3(1, 2, 3), Poly3(4, 5, 6)) == Poly3(4, 10, 18)

    @given(triples, triples)
    def test_commutative_exact(self, a, b):
        assert mul(a, b) == mul(b, a)

    @given(nondegenerate, nondegenerate, nondegenerate)
    def test_associative(self, a, b, c):
        lhs, rhs = mul(mul(a, b), c), mul(a, mul(b, c))
        for x, y in zip(lhs, rhs):
            assert x == pytest.approx(y, rel=1e-12)

    def test_operator_sugar(self):
        assert Poly3(1, 2, 3) * Poly3(4, 5, 6) == Poly3(4, 10, 18)
        assert Poly3(4, 10, 18) / Poly3(4, 5, 6) == Poly3(1, 2, 3)


class TestDiv:
    def test_by_unit(self):
        assert div(Poly3(1, 2, 3), UNIT) == Poly3(1, 2, 3)

    def test_inverse_of_mul(self):
        assert div(Poly3(4, 10, 18), Poly3(4, 5, 6)) == Poly3(1, 2, 3)

    def test_degenerate_divisor(self):
        with pytest.raises(DegenerateDivisor):
            div(UNIT, Poly3(1, 0, 5))

    @given(nondegenerate, nondegenerate)
    def test_mul_div_roundtrip(self, a, b):
        r = div(mul(a, b), b)
        for x, y in zip(r, a):
            assert x == pytest.approx(y, rel=1e-12)


class TestConj:
    def test_unit_fixed(self):
        assert conj(UNIT, "dagger") == UNIT
        assert conj(UNIT, "ddagger") == UNIT

    def test_cycles(self):
        assert conj(Poly3(1, 2, 3), "dagger") == Poly3(3, 1, 2)
        assert conj(Poly3(1, 2, 3), "ddagger") == Poly3(2, 3, 1)

    @given(triples)
    def test_order_three(self, a):
        for kind in ("dagger", "ddagger"):
            assert conj(conj(conj(a, kind), kind), kind) == a

    def test_triple_product_is_real(self):
        a = Poly3(1, 2, 3)
        t = mul(mul(a, conj(a, "dagger")), conj(a, "ddagger"))
        assert t == Poly3(6, 6, 6)

    @given(triples, triples)
    def test_automorphism_exact(self, a, b):
        for kind in ("dagger", "ddagger"):
            assert conj(mul(a, b), kind) == mul(conj(a, kind), conj(b, kind))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            conj(UNIT, "transpose")


class TestNorm:
    def test_unit(self):
        assert norm(UNIT) == 1.0

    def test_example(self):
        assert norm(Poly3(1, 2, 3)) == pytest.approx(6 ** (1 / 3), rel=1e-15)

    def test_degenerate_is_zero(self):
        assert norm(Poly3(1, 0, 5)) == 0.0

    @given(nondegenerate, nondegenerate)
    def test_multiplicative(self, a, b):
        assert norm(mul(a, b)) == pytest.approx(norm(a) * norm(b), rel=1e-12)


class TestExp3:
    def test_zero(self):
        assert exp3(Poly3(0, 0, 0)) == UNIT

    def test_componentwise(self):
        r = exp3(Poly3(math.log(2), math.log(3), math.log(4)))
        for x, y in zip(r, (2, 3, 4)):
            assert x == pytest.approx(y, rel=1e-15)

    def test_traceless_exponent_has_unit_norm(self):
        r = exp3(Poly3(1, 1, -2))
        assert r.c1 == pytest.approx(math.e)
        assert r.c3 == pytest.approx(math.exp(-2))
        assert norm(r) == pytest.approx(1.0, rel=1e-14)

    @given(
        st.tuples(*[st.floats(-30, 30) for _ in range(3)]).map(lambda t: Poly3(*t)),
        st.tuples(*[st.floats(-30, 30) for _ in range(3)]).map(lambda t: Poly3(*t)),
    )
    def test_addition_law(self, a, b):
        s = Poly3(a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3)
        lhs, rhs = exp3(s), mul(exp3(a), exp3(b))
        for x, y in zip(lhs, rhs):
            assert x == pytest.approx(y, rel=1e-12)


class TestScalar3:
    def test_basis(self):
        assert scalar3(E1, E2, E3) == 1.0

    def test_all_units(self):
        assert scalar3(UNIT, UNIT, UNIT) == 6.0

    def test_diagonal(self):
        a = Poly3(1, 2, 3)
        assert scalar3(a, a, a) == 36.0  # 6 * 1 * 2 * 3

    def test_oracle_six_term(self):
        # independent spelling of the permanent
        a, b, c = Poly3(1.5, -2.0, 0.25), Poly3(3.0, 0.5, -1.0), Poly3(-0.75, 2.0, 4.0)
        want = (
            a.c1 * b.c2 * c.c3
            + a.c1 * b.c3 * c.c2
            + a.c2 * b.c1 * c.c3
            + a.c2 * b.c3 * c.c1
            + a.c3 * b.c1 * c.c2
            + a.c3 * b.c2 * c.c1
        )
        assert scalar3(a, b, c) == pytest.approx(want, rel=1e-14)

    @given(nondegenerate, nondegenerate, nondegenerate)
    def test_permutation_symmetry_exact(self, a, b, c):
        base = scalar3(a, b, c)
        for p in permutations((a, b, c)):
            assert scalar3(*p) == base


class TestSignedCuberoot:
    @pytest.mark.parametrize("x,want", [(8.0, 2.0), (-8.0, -2.0), (0.0, 0.0)])
    def test_values(self, x, want):
        assert signed_cuberoot(x) == pytest.approx(want)

    def test_odd(self):
        assert signed_cuberoot(-2.0) == -signed_cuberoot(2.0)


class TestPoly3Type:
    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            Poly3(1.0, math.inf, 0.0)

    def test_degenerate_flag(self):
        assert Poly3(1, 0, 5).degenerate
        assert not Poly3(1, 2, 3).degenerate

    def test_first_octant_flag(self):
        assert Poly3(1, 2, 3).first_octant
        assert not Poly3(1, -2, 3).first_octant
