"""Canonical JSON for geometric forms.

{"n": 3, "terms": [{"blade": [0, 1], "coeff": "1"}]} with terms sorted by grade,
then lexicographic blade order, and coefficients as exact "p/q" strings.
"""

from typing import List, Optional

from pydantic import BaseModel, ValidationError, field_validator

from src.layer1_settings import InputValidationError
from src.utils.rationals import approximate, format_rational, parse_rational
from .forms import GeometricForm
from .frame import Blade, Frame


class TermPayload(BaseModel):
    """One blade coefficient."""
    blade: List[int]
    coeff: str
    approx: Optional[str] = None

    @field_validator("coeff")
    @classmethod
    def coeff_is_rational(cls, value: str) -> str:
        parse_rational(value, "coeff")
        return value

    @field_validator("blade")
    @classmethod
    def blade_is_ascending(cls, value: List[int]) -> List[int]:
        if any(b <= a for a, b in zip(value, value[1:])) or any(i < 0 for i in value):
            raise ValueError(f"blade {value} must be strictly ascending and non-negative")
        return value


class FormPayload(BaseModel):
    """Wire form of a GeometricForm."""
    n: int
    terms: List[TermPayload] = []


def form_to_payload(x: GeometricForm, approx_digits: Optional[int] = None) -> FormPayload:
    terms = []
    for blade, coefficient in x.sorted_terms():
        terms.append(TermPayload(
            blade=list(blade.indices),
            coeff=format_rational(coefficient),
            approx=approximate(coefficient, approx_digits) if approx_digits else None,
        ))
    return FormPayload(n=x.frame.n, terms=terms)


def form_to_json(x: GeometricForm, approx_digits: Optional[int] = None) -> str:
    """Bit-exact canonical serialization."""
    return form_to_payload(x, approx_digits).model_dump_json(exclude_none=True)


def form_from_payload(payload: FormPayload) -> GeometricForm:
    """
    Rebuild a form; duplicate blades are rejected, term order is free.

    Raises:
        InputValidationError: malformed blades or coefficients
    """
    frame = Frame(payload.n)
    terms = {}
    for term in payload.terms:
        blade = Blade.of(term.blade, frame.n)
        if blade in terms:
            raise InputValidationError("terms", f"duplicate blade {term.blade}")
        terms[blade] = parse_rational(term.coeff, "coeff")
    return GeometricForm(frame, terms)


def form_from_json(text: str) -> GeometricForm:
    try:
        payload = FormPayload.model_validate_json(text)
    except ValidationError as e:
        raise InputValidationError("form", str(e)) from e
    return form_from_payload(payload)
