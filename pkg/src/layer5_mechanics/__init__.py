"""Layer 5: Mechanics - systems of applied forces as degree-2 forms."""

from .models import SystemClass, AppliedForce, ForceSystem, PoinsotReduction
from .statics import (
    system_form,
    resultant,
    moment_ratio,
    equivalent,
    reduce_poinsot,
    scalar_invariant,
    classify_system,
    edge_decomposition,
    single_force,
    poinsot_pair,
    static_moment,
    materially_equivalent,
)
from .schemas import (
    AppliedForcePayload,
    ForceSystemPayload,
    system_from_payload,
    system_from_json,
    force_to_payload,
    system_to_payload,
)

__all__ = [
    "SystemClass",
    "AppliedForce",
    "ForceSystem",
    "PoinsotReduction",
    "system_form",
    "resultant",
    "moment_ratio",
    "equivalent",
    "reduce_poinsot",
    "scalar_invariant",
    "classify_system",
    "edge_decomposition",
    "single_force",
    "poinsot_pair",
    "static_moment",
    "materially_equivalent",
    "AppliedForcePayload",
    "ForceSystemPayload",
    "system_from_payload",
    "system_from_json",
    "force_to_payload",
    "system_to_payload",
]
