"""Affine domain types: weighted points and simplex bases."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from src.layer1_settings import ArityError, DegenerateBasisError, GradeError
from src.layer2_core import (
    Frame,
    GeometricForm,
    make_point,
    require_same_frame,
    scale,
    top_coefficient,
    wedge_all,
)
from src.layer3_boundary import require_point
from src.utils.rationals import ScalarLike, to_scalar


@dataclass(frozen=True)
class WeightedPoint:
    """A unit-mass point carrying a weight."""
    point: GeometricForm
    weight: Fraction

    def __post_init__(self):
        require_point(self.point, "weighted point")
        object.__setattr__(self, "weight", to_scalar(self.weight, "weight"))

    @classmethod
    def at(cls, frame: Frame, coords: Sequence[ScalarLike], weight: ScalarLike) -> "WeightedPoint":
        return cls(make_point(frame, coords), to_scalar(weight, "weight"))

    def as_form(self) -> GeometricForm:
        """weight * point, a grade-1 form of mass `weight`."""
        return scale(self.weight, self.point)


@dataclass(frozen=True)
class SimplexBasis:
    """
    n+1 grade-1 forms x1..x_{n+1} whose product does not vanish.

    With unit-mass vertices this is a non-degenerate simplex and coordinates
    are barycentric; arbitrary grade-1 forms give projective coordinates.
    """
    vertices: Tuple[GeometricForm, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if not vertices:
            raise ArityError("simplex basis", "n+1 vertices", 0)
        frame = require_same_frame(*vertices)
        if len(vertices) != frame.n + 1:
            raise ArityError("simplex basis", frame.n + 1, len(vertices))
        for vertex in vertices:
            if vertex.grades() != frozenset({1}):
                raise GradeError(1, "simplex basis vertices must be non-zero grade-1 forms")
        if self.top == 0:
            raise DegenerateBasisError()

    @classmethod
    def from_points(cls, frame: Frame, coords: Sequence[Sequence[ScalarLike]]) -> "SimplexBasis":
        return cls(tuple(make_point(frame, c) for c in coords))

    @property
    def frame(self) -> Frame:
        return self.vertices[0].frame

    @property
    def top(self) -> Fraction:
        """x1 ^ ... ^ x_{n+1} / (O ^ v1 ^ ... ^ vn)."""
        return top_coefficient(wedge_all(self.vertices))
