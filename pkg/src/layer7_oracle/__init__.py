"""Layer 7: Oracle - free forms over point tuples, equality by volume evaluation."""

from .free_forms import (
    FreeForm,
    frame_simplex,
    free_vol,
    free_combine,
    free_wedge,
    free_omega,
    free_equals,
    canonicalize,
)
from .schemas import FreeTermPayload, FreeFormPayload, free_form_from_payload, free_form_from_json

__all__ = [
    "FreeForm",
    "frame_simplex",
    "free_vol",
    "free_combine",
    "free_wedge",
    "free_omega",
    "free_equals",
    "canonicalize",
    "FreeTermPayload",
    "FreeFormPayload",
    "free_form_from_payload",
    "free_form_from_json",
]
