"""Layer 1: Settings - Typed exception hierarchy."""

from typing import Optional

from .constants import EXIT_DOMAIN_ERROR, EXIT_PARSE_ERROR


class GeometricCalculusError(Exception):
    """Base exception for all application errors."""
    exit_code: int = EXIT_DOMAIN_ERROR


# Tier 1: Input and parse errors


class ExpressionSyntaxError(GeometricCalculusError):
    """Form expression could not be parsed."""
    exit_code = EXIT_PARSE_ERROR

    def __init__(self, message: str, line: int, column: int):
        self.reason = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class InputValidationError(GeometricCalculusError):
    """Structured input (JSON, rational literal) failed validation."""
    exit_code = EXIT_PARSE_ERROR

    def __init__(self, field: str, reason: str):
        self.field = field
        super().__init__(f"Validation error in {field}: {reason}")


# Tier 2: Algebraic preconditions


class DimensionError(GeometricCalculusError):
    """Frame dimension outside the supported range."""
    def __init__(self, n: int, max_dimension: int):
        self.n = n
        super().__init__(f"Dimension must be in [1, {max_dimension}], got {n}")


class FrameMismatchError(GeometricCalculusError):
    """Operands live over different frames."""
    def __init__(self, left_n: int, right_n: int):
        super().__init__(f"Frame mismatch: n={left_n} vs n={right_n}")


class ArityError(GeometricCalculusError):
    """Wrong number of coordinates or arguments."""
    def __init__(self, what: str, expected, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"{what} expects {expected} entries, got {got}")


class GradeError(GeometricCalculusError):
    """Grade outside [0, n+1] or unsupported for the operation."""
    def __init__(self, grade: int, reason: str):
        self.grade = grade
        super().__init__(f"Grade {grade}: {reason}")


class NotHomogeneousError(GeometricCalculusError):
    """Operation requires a form with a single grade."""
    def __init__(self, grades):
        self.grades = sorted(grades)
        super().__init__(f"Form is not homogeneous (grades {self.grades})")


class GradeMismatchError(GeometricCalculusError):
    """Grades of the operands do not sum as required."""
    def __init__(self, left: int, right: int, expected_sum: int):
        super().__init__(f"Grades {left} + {right} must sum to {expected_sum}")


class NotAPointError(GeometricCalculusError):
    """Expected a grade-1 form of mass exactly 1."""
    def __init__(self, what: str = "argument"):
        super().__init__(f"{what} is not a unit-mass point")


class NotAVectorError(GeometricCalculusError):
    """Expected a grade-1 form of mass 0."""
    def __init__(self, what: str = "argument"):
        super().__init__(f"{what} is not a vector")


class NotPureVectorError(GeometricCalculusError):
    """Expected a pure k-vector (omega vanishes)."""
    def __init__(self, reason: str):
        super().__init__(f"Not a pure k-vector: {reason}")


class UnsupportedDimensionError(GeometricCalculusError):
    """Operation is only defined in a specific dimension."""
    def __init__(self, operation: str, required: int, got: int):
        super().__init__(f"{operation} requires n={required}, got n={got}")


# Tier 3: Geometry and mechanics


class NoBarycenterError(GeometricCalculusError):
    """Total weight is zero: the combination is a vector."""
    def __init__(self):
        super().__init__("Total weight is zero; the system has no barycenter")


class DegenerateBasisError(GeometricCalculusError):
    """Simplex vertices do not span (their product vanishes)."""
    def __init__(self, reason: str = "product of the vertices is zero"):
        super().__init__(f"Degenerate simplex basis: {reason}")


class DegenerateAxisError(GeometricCalculusError):
    """Axis given by two coincident points."""
    def __init__(self):
        super().__init__("Axis points coincide")


class NotClosedError(GeometricCalculusError):
    """Oriented surface has a non-vanishing boundary."""
    def __init__(self, reason: str = "sum of face bivectors is not zero"):
        super().__init__(f"Surface is not closed: {reason}")


class NotSingleForceError(GeometricCalculusError):
    """System does not reduce to a single force."""
    def __init__(self, system_class: str):
        super().__init__(f"System is a {system_class}, not a single force")


# Tier 4: Internal


class InvariantViolationError(GeometricCalculusError):
    """An identity that must hold exactly did not."""
    def __init__(self, identity: str):
        super().__init__(f"Invariant violated: {identity}")
