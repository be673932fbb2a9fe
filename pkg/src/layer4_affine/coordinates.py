"""Coordinates of forms with respect to the bases induced by a simplex."""

from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from src.layer1_settings import GradeError, InvariantViolationError, logger
from src.layer2_core import (
    GeometricForm,
    equals,
    homogeneous_grade,
    linear_combine,
    scale,
    top_coefficient,
    wedge,
    wedge_all,
)
from src.utils.linear_algebra import solve_columns
from .models import SimplexBasis


def _permutation_sign(sequence: Tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(sequence)) for j in range(i + 1, len(sequence))
        if sequence[i] > sequence[j]
    )
    return -1 if inversions & 1 else 1


def _uses_signed_faces(k: int, n: int) -> bool:
    return k == n and n >= 2


def induced_basis(basis: SimplexBasis, k: int) -> List[Tuple[Tuple[int, ...], GeometricForm]]:
    """
    Basis of F_k induced by the simplex, labelled by 0-based vertex indices.

    Grade 1: the vertices. Grade n (n >= 2): the signed faces
    (-1)^i * (product of all vertices but x_i), ordered by the omitted
    vertex, so in A3: x2x3x4, -x1x3x4, x1x2x4, -x1x2x3. Otherwise the
    k-fold products in lexicographic order (the six edges in A3).
    """
    frame = basis.frame
    frame.check_grade(k)
    if k == 0:
        raise GradeError(0, "coordinates need grade 1..n+1")
    vertices = basis.vertices
    count = len(vertices)
    if _uses_signed_faces(k, frame.n):
        elements = []
        for omitted in range(count):
            face = tuple(i for i in range(count) if i != omitted)
            product = wedge_all([vertices[i] for i in face])
            elements.append((face, scale(-1 if omitted % 2 else 1, product)))
        return elements
    return [
        (subset, wedge_all([vertices[i] for i in subset]))
        for subset in combinations(range(count), k)
    ]


def _grade_of(x: GeometricForm, grade: Optional[int]) -> int:
    found = homogeneous_grade(x)
    if found is None:
        if grade is None:
            raise GradeError(-1, "the zero form has no grade; pass grade explicitly")
        return grade
    if grade is not None and grade != found:
        raise GradeError(found, f"form has grade {found}, expected {grade}")
    return found


def coords(x: GeometricForm, basis: SimplexBasis, grade: Optional[int] = None) -> List[Fraction]:
    """
    Coefficients of x in the induced basis of F_k, by exact linear solve.

    Grade 1 gives barycentric (projective) coordinates, grade 2 the edge
    coordinates, grade n the signed-face coordinates.

    Raises:
        NotHomogeneousError: x mixes grades
        GradeError: grade 0, or zero form without an explicit grade
        InvariantViolationError: reconstruction failed
    """
    k = _grade_of(x, grade)
    elements = induced_basis(basis, k)
    blades = list(basis.frame.blades(k))
    columns = [[element.coefficient(b) for b in blades] for _, element in elements]
    rhs = [x.coefficient(b) for b in blades]
    solution = solve_columns(columns, rhs)
    if solution is None:
        raise InvariantViolationError("induced simplex basis spans F_k")

    reconstructed = linear_combine(
        [(c, element) for c, (_, element) in zip(solution, elements)], frame=basis.frame
    )
    if not equals(reconstructed, x):
        raise InvariantViolationError("sum c_i * basis_i = x")
    logger.debug(f"coords: grade {k} in {len(elements)}-element basis")
    return solution


def quotient_coords(x: GeometricForm, basis: SimplexBasis, grade: Optional[int] = None) -> List[Fraction]:
    """
    The same coordinates through the quotient formulas z / (x1 ... x_{n+1}).

    For a k-subset S with ascending complement C, alpha_S is
    sign(S, C) * (x ^ x_C) / top; in A3 this gives alpha_12 = s x3 x4 / top,
    alpha_13 = s x4 x2 / top, and alpha_1 = x x2 x3 x4 / top for grade 1.
    Signed-face coordinates are beta_i = x_i y / top.
    """
    k = _grade_of(x, grade)
    basis.frame.check_grade(k)
    if k == 0:
        raise GradeError(0, "coordinates need grade 1..n+1")
    vertices = basis.vertices
    count = len(vertices)
    top = basis.top

    if _uses_signed_faces(k, basis.frame.n):
        return [top_coefficient(wedge(vertices[i], x)) / top for i in range(count)]

    result = []
    for subset in combinations(range(count), k):
        complement = tuple(i for i in range(count) if i not in subset)
        sign = _permutation_sign(subset + complement)
        completed = wedge(x, wedge_all([vertices[i] for i in complement], frame=basis.frame))
        result.append(sign * top_coefficient(completed) / top)
    return result
