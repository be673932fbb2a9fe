"""Tests for vector factorization, common factors and degree-2 decompositions."""

from fractions import Fraction

import pytest

from src.layer1_settings import (
    GradeError,
    InvariantViolationError,
    NotAPointError,
    NotPureVectorError,
    UnsupportedDimensionError,
)
from src.layer2_core import Frame, equals, make_vector, scalar_form, wedge, wedge_all, zero
from src.layer3_boundary import omega
from src.layer4_affine import (
    common_factor,
    decompose_degree2,
    factor,
    factor_bivector,
    vector_quotient,
)


class TestFactorBivector:
    """Test the pivot split of pure bivectors."""

    def test_basis_bivector(self, v):
        u, w = factor_bivector(2 * (v[1] ^ v[2]))
        assert equals(u, v[2])
        assert equals(w, -2 * v[1])

    def test_general_bivector(self, V):
        x = V(1, 2, 3) ^ V(-1, 0, Fraction(1, 2))
        u, w = factor_bivector(x)
        assert equals(wedge(u, w), x)

    def test_zero(self, frame3):
        assert factor_bivector(zero(frame3)) is None

    def test_indecomposable_in_four_dimensions(self):
        frame = Frame(4)
        e = [None] + [make_vector(frame, [int(i == j) for j in range(1, 5)]) for i in range(1, 5)]
        assert factor_bivector((e[1] ^ e[2]) + (e[3] ^ e[4])) is None

    def test_rejects_applied_bivector(self, O, v):
        with pytest.raises(NotPureVectorError):
            factor_bivector(O ^ v[1])


class TestFactor:
    """Test factorization of k-vectors in A3."""

    def test_vector(self, V):
        assert factor(V(1, 2, 3)) == [V(1, 2, 3)]

    def test_bivector(self, V):
        x = V(0, 1, 1) ^ V(2, 0, -1)
        factors = factor(x)
        assert len(factors) == 2
        assert equals(wedge_all(factors), x)

    def test_trivector(self, v):
        x = 3 * wedge_all([v[2], v[1], v[3]])
        assert factor(x) == [v[1], v[2], -3 * v[3]]

    def test_zero(self, frame3):
        assert factor(zero(frame3)) == []

    def test_rejects_non_pure(self, P, v):
        with pytest.raises(NotPureVectorError):
            factor(P(1, 0, 0) ^ v[2])

    def test_rejects_scalar(self, frame3):
        with pytest.raises(GradeError):
            factor(scalar_form(frame3, 2))

    def test_named_dimension_only(self, frame2):
        with pytest.raises(UnsupportedDimensionError):
            factor(make_vector(frame2, [1, 0]) ^ make_vector(frame2, [0, 1]))


class TestVectorQuotient:
    """Test solving y ^ v = target for v."""

    def test_divides(self, V, v):
        target = V(1, 1, 0) ^ V(0, 2, 5)
        quotient = vector_quotient(V(1, 1, 0), target)
        assert equals(wedge(V(1, 1, 0), quotient), target)

    def test_not_a_factor(self, v):
        with pytest.raises(InvariantViolationError):
            vector_quotient(v[3], v[1] ^ v[2])


class TestCommonFactor:
    """Test b1 = y ^ v, b2 = y ^ w with a shared vector y."""

    def test_two_coordinate_planes(self, v):
        b1, b2 = v[1] ^ v[2], v[1] ^ v[3]
        y, x1, x2 = common_factor(b1, b2)
        assert not y.is_zero()
        assert equals(wedge(y, x1), b1)
        assert equals(wedge(y, x2), b2)

    def test_general_planes(self, V):
        b1 = V(1, 2, 0) ^ V(0, 1, 4)
        b2 = V(3, -1, 1) ^ V(1, 1, 1)
        y, x1, x2 = common_factor(b1, b2)
        assert equals(wedge(y, x1), b1)
        assert equals(wedge(y, x2), b2)

    def test_proportional_planes(self, v):
        b1 = v[1] ^ v[2]
        y, x1, x2 = common_factor(b1, 3 * b1)
        assert equals(wedge(y, x2), 3 * b1)

    def test_one_zero(self, frame3, v):
        b = v[2] ^ v[3]
        y, x1, x2 = common_factor(b, zero(frame3))
        assert equals(wedge(y, x1), b)
        assert x2.is_zero()


class TestDecomposeDegree2:
    """Test x = PB + PC + CD + DP."""

    def test_general_form(self, O, P, v):
        x = (P(1, 0, 0) ^ P(0, 1, 0)) + (v[1] ^ v[3])
        decomposition = decompose_degree2(x, P(2, -1, 1))
        assert equals(decomposition.as_form(), x)
        assert equals(decomposition.b, P(2, -1, 1) + omega(x))

    def test_bivector_has_no_b(self, O, v):
        decomposition = decompose_degree2(v[1] ^ v[2], O)
        assert decomposition.b is None
        assert decomposition.c is not None and decomposition.d is not None

    def test_point_on_the_line_has_no_c_d(self, O, v):
        decomposition = decompose_degree2(O ^ v[1], O)
        assert decomposition.c is None and decomposition.d is None
        assert equals(decomposition.as_form(), O ^ v[1])

    def test_rejects_wrong_grade(self, O, P):
        with pytest.raises(GradeError):
            decompose_degree2(P(1, 0, 0), O)

    def test_rejects_non_point(self, v):
        with pytest.raises(NotAPointError):
            decompose_degree2(v[1] ^ v[2], v[3])
