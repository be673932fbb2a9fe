"""Force system JSON: {"forces": [{"at": ["p/q", ...], "vec": ["p/q", ...]}]}."""

from typing import List

from pydantic import BaseModel, ValidationError, field_validator

from src.layer1_settings import InputValidationError
from src.layer2_core import Blade, Frame
from src.utils.rationals import format_rational, parse_rational
from .models import AppliedForce, ForceSystem


class AppliedForcePayload(BaseModel):
    at: List[str]
    vec: List[str]

    @field_validator("at", "vec")
    @classmethod
    def coordinates_are_rational(cls, value: List[str]) -> List[str]:
        for entry in value:
            parse_rational(entry, "coordinate")
        return value


class ForceSystemPayload(BaseModel):
    forces: List[AppliedForcePayload] = []


def system_from_payload(payload: ForceSystemPayload, frame: Frame) -> ForceSystem:
    """
    Raises:
        ArityError: coordinate lists of the wrong length
        InputValidationError: malformed rationals
    """
    return ForceSystem.from_pairs(
        frame,
        (
            ([parse_rational(c, "at") for c in force.at], [parse_rational(c, "vec") for c in force.vec])
            for force in payload.forces
        ),
    )


def system_from_json(text: str, frame: Frame) -> ForceSystem:
    try:
        payload = ForceSystemPayload.model_validate_json(text)
    except ValidationError as e:
        raise InputValidationError("force system", str(e)) from e
    return system_from_payload(payload, frame)


def force_to_payload(applied: AppliedForce) -> AppliedForcePayload:
    n = applied.frame.n
    return AppliedForcePayload(
        at=[format_rational(applied.application.coefficient(Blade.of([i]))) for i in range(1, n + 1)],
        vec=[format_rational(applied.force.coefficient(Blade.of([i]))) for i in range(1, n + 1)],
    )


def system_to_payload(s: ForceSystem) -> ForceSystemPayload:
    return ForceSystemPayload(forces=[force_to_payload(f) for f in s.forces])
