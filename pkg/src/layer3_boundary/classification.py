"""Degree-wise classification of homogeneous forms."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.layer1_settings import GradeError, logger
from src.layer1_settings.constants import NAMED_CLASS_DIMENSION
from src.layer2_core import GeometricForm, homogeneous_grade, wedge
from .omega import is_pure, mass


class FormClass(str, Enum):
    """Kinds of homogeneous forms."""
    WEIGHTED_POINT = "WeightedPoint"
    VECTOR = "Vector"
    BIPOINT = "Bipoint"
    BIVECTOR = "Bivector"
    GENERAL_DEGREE2 = "GeneralDegree2"
    TRIPOINT = "Tripoint"
    TRIVECTOR = "Trivector"
    QUADRI_POINT = "QuadriPoint"
    ZERO = "Zero"
    # Outside A3 only the omega test is named
    K_VECTOR = "KVector"
    APPLIED_FORM = "AppliedForm"


@dataclass(frozen=True)
class Classification:
    """Classification result with the tests that decided it."""
    kind: FormClass
    grade: Optional[int]
    pure: bool                             # omega(x) == 0
    self_wedge_zero: Optional[bool] = None  # x ^ x == 0, grade 2 only


def _named_kind(grade: int, pure: bool, self_wedge_zero: Optional[bool]) -> FormClass:
    if grade == 2:
        if pure:
            return FormClass.BIVECTOR
        return FormClass.BIPOINT if self_wedge_zero else FormClass.GENERAL_DEGREE2
    if grade == 3:
        return FormClass.TRIVECTOR if pure else FormClass.TRIPOINT
    return FormClass.QUADRI_POINT


def classify(x: GeometricForm) -> Classification:
    """
    Classify a homogeneous form of grade 1..n+1.

    Grade 1 splits on the mass. In A3, grade 2 is a bivector when omega
    vanishes, else a bipoint when x ^ x = 0, else general; grade 3 is a
    trivector or a tripoint; grade 4 is a quadri-point. For other n the
    grade >= 2 kinds are KVector / AppliedForm.

    Raises:
        NotHomogeneousError: mixed grades
        GradeError: non-zero scalar
    """
    grade = homogeneous_grade(x)
    if grade is None:
        return Classification(kind=FormClass.ZERO, grade=None, pure=True)
    if grade == 0:
        raise GradeError(0, "classification needs grade 1..n+1")

    pure = is_pure(x)
    if grade == 1:
        kind = FormClass.VECTOR if mass(x) == 0 else FormClass.WEIGHTED_POINT
        return Classification(kind=kind, grade=1, pure=pure)

    self_wedge_zero = wedge(x, x).is_zero() if grade == 2 else None
    if x.frame.n == NAMED_CLASS_DIMENSION:
        kind = _named_kind(grade, pure, self_wedge_zero)
    else:
        kind = FormClass.K_VECTOR if pure else FormClass.APPLIED_FORM
    logger.debug(f"classify: grade {grade}, n={x.frame.n} -> {kind.value}")
    return Classification(kind=kind, grade=grade, pure=pure, self_wedge_zero=self_wedge_zero)
