"""FreeForm JSON: {"k": 2, "terms": [{"coeff": "p/q", "points": [["0", "0", "0"], ...]}]}."""

from typing import List, Union

from pydantic import BaseModel, ValidationError, field_validator

from src.layer1_settings import InputValidationError
from src.utils.rationals import parse_rational
from .free_forms import FreeForm

Coordinate = Union[int, str]


class FreeTermPayload(BaseModel):
    coeff: str
    points: List[List[Coordinate]]

    @field_validator("coeff")
    @classmethod
    def coeff_is_rational(cls, value: str) -> str:
        parse_rational(value, "coeff")
        return value


class FreeFormPayload(BaseModel):
    k: int
    terms: List[FreeTermPayload] = []


def _coordinate(value: Coordinate):
    return parse_rational(value, "coordinate") if isinstance(value, str) else value


def free_form_from_payload(payload: FreeFormPayload, n: int) -> FreeForm:
    return FreeForm(
        payload.k,
        n,
        tuple(
            (parse_rational(term.coeff, "coeff"), tuple(tuple(_coordinate(c) for c in p) for p in term.points))
            for term in payload.terms
        ),
    )


def free_form_from_json(text: str, n: int) -> FreeForm:
    try:
        payload = FreeFormPayload.model_validate_json(text)
    except ValidationError as e:
        raise InputValidationError("free form", str(e)) from e
    return free_form_from_payload(payload, n)
