"""Applied forces, force systems and their reductions."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence, Tuple

from src.layer1_settings import FrameMismatchError
from src.layer2_core import (
    Frame,
    GeometricForm,
    linear_combine,
    make_point,
    make_vector,
    require_same_frame,
    wedge,
)
from src.layer3_boundary import require_point, require_vector
from src.utils.rationals import ScalarLike


class SystemClass(str, Enum):
    """Reduced shape of a system of applied forces in A3."""
    NULL = "Null"
    SINGLE_FORCE = "SingleForce"
    COUPLE = "Couple"
    WRENCH = "Wrench"


@dataclass(frozen=True)
class AppliedForce:
    """A force vector applied at a point; its form is the bipoint P ^ F."""
    application: GeometricForm
    force: GeometricForm

    def __post_init__(self):
        require_same_frame(self.application, self.force)
        require_point(self.application, "application point")
        require_vector(self.force, "force")

    @classmethod
    def at(
        cls, frame: Frame, point: Sequence[ScalarLike], vector: Sequence[ScalarLike]
    ) -> "AppliedForce":
        return cls(make_point(frame, point), make_vector(frame, vector))

    @property
    def frame(self) -> Frame:
        return self.application.frame

    def as_form(self) -> GeometricForm:
        return wedge(self.application, self.force)


@dataclass(frozen=True)
class ForceSystem:
    """Finite list of applied forces over one frame; may be empty."""
    frame: Frame
    forces: Tuple[AppliedForce, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "forces", tuple(self.forces))
        for applied in self.forces:
            if applied.frame != self.frame:
                raise FrameMismatchError(self.frame.n, applied.frame.n)

    @classmethod
    def from_pairs(
        cls,
        frame: Frame,
        pairs: Iterable[Tuple[Sequence[ScalarLike], Sequence[ScalarLike]]],
    ) -> "ForceSystem":
        """Build from (application coordinates, force coordinates) pairs."""
        return cls(frame, tuple(AppliedForce.at(frame, at, vec) for at, vec in pairs))

    def combine(self, other: "ForceSystem") -> "ForceSystem":
        """Union of both systems; its form is the sum of the two forms."""
        if other.frame != self.frame:
            raise FrameMismatchError(self.frame.n, other.frame.n)
        return ForceSystem(self.frame, self.forces + other.forces)

    def __len__(self) -> int:
        return len(self.forces)


@dataclass(frozen=True)
class PoinsotReduction:
    """A force at `at` plus a couple, reconstructing the system form."""
    at: GeometricForm
    resultant: GeometricForm
    couple: GeometricForm

    def as_form(self) -> GeometricForm:
        return linear_combine([(1, wedge(self.at, self.resultant)), (1, self.couple)])
