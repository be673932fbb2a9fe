"""Exact linear algebra over the rationals, backed by sympy matrices."""

from fractions import Fraction
from typing import List, Optional, Sequence

import sympy


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    """Build an exact sympy matrix from rows of Fractions."""
    return sympy.Matrix([[_to_sympy(entry) for entry in row] for row in rows])


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square matrix."""
    if not rows:
        return Fraction(1)
    return _to_fraction(to_matrix(rows).det(method="bareiss"))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank."""
    if not rows or not rows[0]:
        return 0
    return int(to_matrix(rows).rank())


def solve_columns(
    columns: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> Optional[List[Fraction]]:
    """
    Solve sum_j c_j * columns[j] = rhs exactly.

    Free parameters of an underdetermined system are set to zero.

    Returns:
        The coefficients c_j, or None when the system is inconsistent
    """
    if not columns:
        return [] if all(v == 0 for v in rhs) else None
    size = len(rhs)
    matrix = sympy.Matrix(
        size, len(columns), lambda i, j: _to_sympy(columns[j][i])
    )
    target = sympy.Matrix(size, 1, lambda i, _: _to_sympy(rhs[i]))
    try:
        solution, params = matrix.gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({symbol: 0 for symbol in params})
    return [_to_fraction(entry) for entry in solution]
