"""Utility functions for exact rationals and exact linear algebra."""

from .rationals import Scalar, ScalarLike, to_scalar, parse_rational, format_rational, approximate
from .linear_algebra import determinant, rank, solve_columns

__all__ = [
    "Scalar",
    "ScalarLike",
    "to_scalar",
    "parse_rational",
    "format_rational",
    "approximate",
    "determinant",
    "rank",
    "solve_columns",
]
