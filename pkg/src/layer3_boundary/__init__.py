"""Layer 3: Boundary - the operator omega, reduction and classification."""

from .omega import (
    omega,
    mass,
    is_pure,
    is_point,
    require_point,
    require_vector,
    reduce_at,
    omega_preimage,
)
from .classification import FormClass, Classification, classify

__all__ = [
    "omega",
    "mass",
    "is_pure",
    "is_point",
    "require_point",
    "require_vector",
    "reduce_at",
    "omega_preimage",
    "FormClass",
    "Classification",
    "classify",
]
