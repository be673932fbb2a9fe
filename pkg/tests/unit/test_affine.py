"""Tests for volume, barycenters, incidence and the duality functional."""

from fractions import Fraction

import pytest

from src.layer1_settings import (
    ArityError,
    DegenerateAxisError,
    DegenerateBasisError,
    GradeError,
    GradeMismatchError,
    NoBarycenterError,
    NotAPointError,
)
from src.layer2_core import equals, linear_combine, wedge_all, zero
from src.layer4_affine import (
    IncidenceKind,
    SimplexBasis,
    WeightedPoint,
    barycenter,
    dual_functional,
    incidence,
    normalize_point,
    same_extension,
    same_orientation,
    vol,
    volume_functional,
)


class TestVolume:
    """Test the affine volume normalized on the frame simplex."""

    def test_frame_simplex(self, frame_simplex):
        assert vol(frame_simplex) == 1

    def test_transposition(self, P):
        assert vol([P(1, 0, 0), P(0, 0, 0), P(0, 1, 0), P(0, 0, 1)]) == -1

    def test_degenerate(self, P):
        assert vol([P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)]) == 0

    def test_scaled_simplex(self, P):
        assert vol([P(0, 0, 0), P(2, 0, 0), P(0, 3, 0), P(0, 0, Fraction(1, 2))]) == 3

    def test_arity(self, P):
        with pytest.raises(ArityError):
            vol([P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)])

    def test_rejects_non_points(self, P, V):
        with pytest.raises(NotAPointError):
            vol([P(0, 0, 0), V(1, 0, 0), P(0, 1, 0), P(0, 0, 1)])

    def test_volume_functional(self, P):
        j = volume_functional(P(0, 0, 0))
        assert j(P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)) == 1
        assert j(P(0, 1, 0), P(1, 0, 0), P(0, 0, 1)) == -1

    def test_orientation_and_extension(self, frame_simplex, P):
        flipped = [frame_simplex[1], frame_simplex[0]] + frame_simplex[2:]
        doubled = [P(0, 0, 0), P(2, 0, 0), P(0, 1, 0), P(0, 0, 1)]
        assert not same_orientation(frame_simplex, flipped)
        assert same_extension(frame_simplex, flipped)
        assert same_orientation(frame_simplex, doubled)
        assert not same_extension(frame_simplex, doubled)

    def test_orientation_of_degenerate_simplex(self, frame_simplex, P):
        flat = [P(0, 0, 0), P(1, 0, 0), P(2, 0, 0), P(0, 0, 1)]
        with pytest.raises(DegenerateBasisError):
            same_orientation(frame_simplex, flat)


class TestBarycenter:
    """Test barycenters of weighted point systems."""

    def test_symmetric_pair(self, frame3, P):
        result = barycenter([WeightedPoint(P(0, 0, 0), 1), WeightedPoint(P(2, 0, 0), 1)])
        assert equals(result.point, P(1, 0, 0))
        assert result.weight == 2

    def test_weighted_average(self, frame3):
        result = barycenter([
            WeightedPoint.at(frame3, [1, 0, 0], 2),
            WeightedPoint.at(frame3, [4, 0, 0], 1),
        ])
        assert equals(result.point, WeightedPoint.at(frame3, [2, 0, 0], 1).point)
        assert result.weight == 3

    def test_exact_identity(self, frame3):
        system = [
            WeightedPoint.at(frame3, [1, 2, 3], Fraction(1, 3)),
            WeightedPoint.at(frame3, [-1, 0, 5], Fraction(5, 7)),
            WeightedPoint.at(frame3, [0, 9, -2], -1),
        ]
        result = barycenter(system)
        combined = linear_combine([(wp.weight, wp.point) for wp in system])
        assert equals(combined, result.weight * result.point)

    def test_zero_total_weight(self, P):
        with pytest.raises(NoBarycenterError):
            barycenter([WeightedPoint(P(1, 0, 0), 1), WeightedPoint(P(0, 1, 0), -1)])

    def test_empty(self):
        with pytest.raises(ArityError):
            barycenter([])

    def test_weighted_point_needs_unit_mass(self, P):
        with pytest.raises(NotAPointError):
            WeightedPoint(2 * P(1, 0, 0), 1)

    def test_normalize_point(self, P, V):
        assert equals(normalize_point(3 * P(1, 2, 3)), P(1, 2, 3))
        with pytest.raises(NoBarycenterError):
            normalize_point(V(1, 0, 0))


class TestIncidence:
    """Test incidence statements decided by form equalities."""

    def test_collinear(self, P):
        assert incidence(IncidenceKind.COLLINEAR, [P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)])
        assert not incidence(IncidenceKind.COLLINEAR, [P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)])

    def test_coplanar(self, frame_simplex, P):
        assert not incidence(IncidenceKind.COPLANAR, frame_simplex)
        assert incidence(IncidenceKind.COPLANAR, [P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(3, 7, 0)])

    def test_parallel_segments(self, P):
        assert incidence(IncidenceKind.PARALLEL_SEGMENTS, [P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)])
        assert not incidence(IncidenceKind.PARALLEL_SEGMENTS, [P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0)])

    def test_same_segment(self, P):
        a, b = P(0, 0, 0), P(2, 0, 0)
        # Sliding along the line keeps the bipoint when the length is kept
        assert incidence(IncidenceKind.SAME_SEGMENT, [a, b, P(1, 0, 0), P(3, 0, 0)])
        assert not incidence(IncidenceKind.SAME_SEGMENT, [a, b, b, a])

    def test_same_triangle_under_cyclic_shift(self, P):
        a, b, c = P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)
        assert incidence(IncidenceKind.SAME_TRIANGLE, [a, b, c, b, c, a])
        assert not incidence(IncidenceKind.SAME_TRIANGLE, [a, b, c, b, a, c])

    def test_same_tetrahedron(self, frame_simplex):
        a, b, c, d = frame_simplex
        assert incidence(IncidenceKind.SAME_TETRAHEDRON, [a, b, c, d, b, a, d, c])
        assert not incidence(IncidenceKind.SAME_TETRAHEDRON, [a, b, c, d, b, a, c, d])

    def test_coincident(self, P):
        assert incidence(IncidenceKind.COINCIDENT, [P(1, 2, 3), P(1, 2, 3)])
        assert not incidence(IncidenceKind.COINCIDENT, [P(1, 2, 3), P(1, 2, 4)])

    def test_lines_parallel(self, P):
        assert incidence(IncidenceKind.LINES_PARALLEL, [P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(5, 1, 0)])
        assert not incidence(IncidenceKind.LINES_PARALLEL, [P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 2, 0)])

    def test_line_parallel_to_plane(self, P):
        plane = [P(0, 0, 1), P(1, 0, 1), P(0, 1, 1)]
        assert incidence(IncidenceKind.LINE_PARALLEL_TO_PLANE, [P(0, 0, 0), P(1, 1, 0)] + plane)
        assert not incidence(IncidenceKind.LINE_PARALLEL_TO_PLANE, [P(0, 0, 0), P(0, 0, 1)] + plane)

    def test_on_line_and_on_plane(self, P):
        assert incidence(IncidenceKind.ON_LINE, [P(3, 0, 0), P(0, 0, 0), P(1, 0, 0)])
        assert not incidence(IncidenceKind.ON_LINE, [P(3, 1, 0), P(0, 0, 0), P(1, 0, 0)])
        assert incidence(IncidenceKind.ON_PLANE, [P(4, 5, 0), P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)])
        assert not incidence(IncidenceKind.ON_PLANE, [P(4, 5, 1), P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)])

    def test_degenerate_line(self, P):
        with pytest.raises(DegenerateAxisError):
            incidence(IncidenceKind.ON_LINE, [P(1, 0, 0), P(0, 0, 0), P(0, 0, 0)])

    def test_degenerate_plane(self, P):
        with pytest.raises(DegenerateBasisError):
            incidence(IncidenceKind.ON_PLANE, [P(1, 0, 0), P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)])

    def test_arity(self, P):
        with pytest.raises(ArityError):
            incidence(IncidenceKind.COLLINEAR, [P(0, 0, 0), P(1, 0, 0)])

    def test_accepts_kind_names(self, P):
        assert incidence("Collinear", [P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)])


class TestDualFunctional:
    """Test phi*(x) = (x ^ phi) / (O v1 ... vn)."""

    def test_point_against_plane(self, O, P, v):
        phi = wedge_all([O, v[1], v[2]])
        # (O + v3) O v1 v2 = v3 O v1 v2 = -O v1 v2 v3
        assert dual_functional(phi, P(0, 0, 1)) == -1

    def test_grade_mismatch(self, frame_simplex):
        phi = wedge_all(frame_simplex[:3])
        with pytest.raises(GradeMismatchError):
            dual_functional(phi, phi)

    def test_linearity(self, O, P, v):
        phi = wedge_all([O, v[1], v[2]])
        x, y = P(1, 2, 3), P(-1, 0, 4)
        alpha, beta = Fraction(2, 3), Fraction(-5, 2)
        combined = linear_combine([(alpha, x), (beta, y)])
        assert dual_functional(phi, combined) == (
            alpha * dual_functional(phi, x) + beta * dual_functional(phi, y)
        )

    def test_zero_operand(self, frame3, P):
        assert dual_functional(zero(frame3), P(1, 0, 0)) == 0


class TestSimplexBasis:
    """Test simplex basis validation."""

    def test_degenerate(self, frame3):
        with pytest.raises(DegenerateBasisError):
            SimplexBasis.from_points(frame3, [[0, 0, 0], [1, 0, 0], [2, 0, 0], [0, 0, 1]])

    def test_arity(self, frame3):
        with pytest.raises(ArityError):
            SimplexBasis.from_points(frame3, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])

    def test_rejects_higher_grade_vertex(self, frame_simplex):
        with pytest.raises(GradeError):
            SimplexBasis(tuple(frame_simplex[:3]) + (frame_simplex[0] ^ frame_simplex[1],))

    def test_projective_vertices(self, frame_simplex):
        weighted = SimplexBasis((2 * frame_simplex[0],) + tuple(frame_simplex[1:]))
        assert weighted.top == 2
