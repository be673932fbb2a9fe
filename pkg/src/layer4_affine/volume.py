"""Affine volume, the Burali-Forti functional, orientation and the duality functional."""

from fractions import Fraction
from typing import Callable, Sequence

from src.layer1_settings import ArityError, DegenerateBasisError, GradeMismatchError, logger
from src.layer2_core import (
    GeometricForm,
    homogeneous_grade,
    require_same_frame,
    top_coefficient,
    wedge,
    wedge_all,
)
from src.layer3_boundary import require_point


def vol(points: Sequence[GeometricForm]) -> Fraction:
    """
    Affine volume of n+1 points, normalized so vol(O, O+v1, ..., O+vn) = 1.

    Raises:
        ArityError: not exactly n+1 points
        NotAPointError: an argument is not a unit-mass point
    """
    points = list(points)
    if not points:
        raise ArityError("vol", "n+1 points", 0)
    frame = require_same_frame(*points)
    if len(points) != frame.n + 1:
        raise ArityError("vol", frame.n + 1, len(points))
    for i, point in enumerate(points):
        require_point(point, f"vol argument {i + 1}")
    return top_coefficient(wedge_all(points))


def volume_functional(p: GeometricForm) -> Callable[..., Fraction]:
    """Burali-Forti functional j(p): (q1, ..., qn) -> vol(p, q1, ..., qn)."""
    require_point(p, "functional point")

    def j(*others: GeometricForm) -> Fraction:
        return vol([p, *others])

    return j


def _nondegenerate_volume(tetrahedron: Sequence[GeometricForm]) -> Fraction:
    volume = vol(tetrahedron)
    if volume == 0:
        raise DegenerateBasisError("oriented simplex has zero volume")
    return volume


def same_orientation(first: Sequence[GeometricForm], second: Sequence[GeometricForm]) -> bool:
    """Two non-degenerate oriented simplices with volumes of equal sign."""
    return (_nondegenerate_volume(first) > 0) == (_nondegenerate_volume(second) > 0)


def same_extension(first: Sequence[GeometricForm], second: Sequence[GeometricForm]) -> bool:
    """Two oriented simplices with volumes of equal absolute value."""
    return abs(vol(first)) == abs(vol(second))


def dual_functional(phi: GeometricForm, x: GeometricForm) -> Fraction:
    """
    phi*(x) = (x ^ phi) / (O ^ v1 ^ ... ^ vn), for grades summing to n+1.

    A zero operand has no grade and yields 0.

    Raises:
        GradeMismatchError: grade(x) + grade(phi) != n+1
    """
    frame = require_same_frame(phi, x)
    phi_grade = homogeneous_grade(phi)
    x_grade = homogeneous_grade(x)
    if phi_grade is None or x_grade is None:
        return Fraction(0)
    if phi_grade + x_grade != frame.n + 1:
        logger.warning(f"dual_functional: grades {x_grade}+{phi_grade} for n={frame.n}")
        raise GradeMismatchError(x_grade, phi_grade, frame.n + 1)
    return top_coefficient(wedge(x, phi))
