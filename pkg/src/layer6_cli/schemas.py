"""Result and input payloads of the command-line interface."""

from fractions import Fraction
from typing import List, Optional, Sequence, Union

from pydantic import BaseModel

from src.layer2_core import Blade, FormPayload, GeometricForm
from src.utils.rationals import approximate, format_rational

Coordinate = Union[int, str]


# Inputs


class WeightedPointInput(BaseModel):
    at: List[Coordinate]
    weight: Coordinate


class BarycenterInput(BaseModel):
    """{"points": [{"at": ["0", "0", "0"], "weight": "1"}, ...]}"""
    points: List[WeightedPointInput]


class SurfaceInput(BaseModel):
    """{"faces": [[[x, y, z], [x, y, z], [x, y, z]], ...]}"""
    faces: List[List[List[Coordinate]]]


# Results


class ScalarPayload(BaseModel):
    value: str
    approx: Optional[str] = None


class ScalarListPayload(BaseModel):
    values: List[str]
    approx: Optional[List[str]] = None


class ReducePayload(BaseModel):
    anchored: FormPayload
    pure: FormPayload


class ClassificationPayload(BaseModel):
    kind: str
    grade: Optional[int] = None
    pure: bool
    self_wedge_zero: Optional[bool] = None


class BarycenterPayload(BaseModel):
    point: List[str]
    weight: str
    point_approx: Optional[List[str]] = None
    weight_approx: Optional[str] = None


class CoordsPayload(BaseModel):
    grade: int
    coords: ScalarListPayload


class PolygonPayload(BaseModel):
    form: FormPayload
    area: Optional[ScalarPayload] = None
    plane: Optional[List[int]] = None
    witness: List[List[str]] = []
    witness_approx: Optional[List[List[str]]] = None


class SurfacePayload(BaseModel):
    form: FormPayload
    volume: ScalarPayload
    witness: List[List[str]] = []
    witness_approx: Optional[List[List[str]]] = None


class PoinsotPayload(BaseModel):
    at: List[str]
    at_approx: Optional[List[str]] = None
    resultant: FormPayload
    couple: FormPayload


class KindPayload(BaseModel):
    kind: str


class TruthPayload(BaseModel):
    holds: bool


class OracleCheckPayload(BaseModel):
    free_equal: bool
    canonical_equal: bool


class FactorPayload(BaseModel):
    factors: List[FormPayload]


class ErrorPayload(BaseModel):
    error: str
    message: str
    line: Optional[int] = None
    column: Optional[int] = None


def scalar_payload(value: Fraction, approx_digits: Optional[int] = None) -> ScalarPayload:
    return ScalarPayload(
        value=format_rational(value),
        approx=approximate(value, approx_digits) if approx_digits else None,
    )


def scalar_list_payload(
    values: Sequence[Fraction], approx_digits: Optional[int] = None
) -> ScalarListPayload:
    return ScalarListPayload(
        values=[format_rational(v) for v in values],
        approx=[approximate(v, approx_digits) for v in values] if approx_digits else None,
    )


def point_coordinates(point: GeometricForm) -> List[str]:
    """Affine coordinates of a unit-mass point."""
    return [
        format_rational(point.coefficient(Blade.of([i])))
        for i in range(1, point.frame.n + 1)
    ]

def point_approximation(point: GeometricForm, approx_digits: Optional[int] = None) -> Optional[List[str]]:
    """Decimal coordinates shown next to point_coordinates when --approx is given."""
    if not approx_digits:
        return None
    return [
        approximate(point.coefficient(Blade.of([i])), approx_digits)
        for i in range(1, point.frame.n + 1)
    ]
