"""Exact rational parsing and formatting."""

from decimal import Decimal, localcontext, ROUND_HALF_EVEN
from fractions import Fraction
from numbers import Rational
from typing import Union

from src.layer1_settings import InputValidationError
from src.layer1_settings.constants import RATIONAL_PATTERN

# Scalars are exact rationals; Fraction keeps lowest terms with a positive denominator.
Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


def to_scalar(value: ScalarLike, field: str = "scalar") -> Fraction:
    """
    Coerce an exact value to a Scalar.

    Accepts Fraction, int (not bool) and "p" / "p/q" strings. Floats are
    rejected: the core never rounds.

    Raises:
        InputValidationError: value is inexact or malformed
    """
    if isinstance(value, bool):
        raise InputValidationError(field, "booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value, field)
    raise InputValidationError(field, f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str, field: str = "scalar") -> Fraction:
    """Parse "p" or "p/q" exactly."""
    match = RATIONAL_PATTERN.match(text)
    if not match:
        raise InputValidationError(field, f"'{text}' is not a rational literal p/q")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InputValidationError(field, f"'{text}' has a zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" string, denominator omitted when 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def approximate(value: Fraction, digits: int) -> str:
    """Decimal approximation with `digits` fractional digits (display only)."""
    with localcontext() as ctx:
        ctx.prec = max(digits + len(str(abs(value.numerator))) + 2, 28)
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return str(quotient.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
