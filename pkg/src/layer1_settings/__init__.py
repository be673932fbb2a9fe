"""Layer 1: Settings - Configuration, logging, error definitions."""

from .config import Settings, settings
from .logger import setup_logging, get_logger, set_invocation_id, get_invocation_id

# Create application logger instance
logger = get_logger("grassmann")

from .errors import (
    GeometricCalculusError,
    ExpressionSyntaxError,
    InputValidationError,
    DimensionError,
    FrameMismatchError,
    ArityError,
    GradeError,
    NotHomogeneousError,
    GradeMismatchError,
    NotAPointError,
    NotAVectorError,
    NotPureVectorError,
    UnsupportedDimensionError,
    NoBarycenterError,
    DegenerateBasisError,
    DegenerateAxisError,
    NotClosedError,
    NotSingleForceError,
    InvariantViolationError,
)
from .constants import *

__all__ = [
    # Config
    "Settings",
    "settings",
    # Logging
    "logger",
    "setup_logging",
    "get_logger",
    "set_invocation_id",
    "get_invocation_id",
    # Errors
    "GeometricCalculusError",
    "ExpressionSyntaxError",
    "InputValidationError",
    "DimensionError",
    "FrameMismatchError",
    "ArityError",
    "GradeError",
    "NotHomogeneousError",
    "GradeMismatchError",
    "NotAPointError",
    "NotAVectorError",
    "NotPureVectorError",
    "UnsupportedDimensionError",
    "NoBarycenterError",
    "DegenerateBasisError",
    "DegenerateAxisError",
    "NotClosedError",
    "NotSingleForceError",
    "InvariantViolationError",
]
