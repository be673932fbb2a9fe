"""The boundary operator omega, the mass functional and the reduction formula."""

from fractions import Fraction
from typing import Tuple

from src.layer1_settings import (
    GradeError,
    InvariantViolationError,
    NotAPointError,
    NotAVectorError,
    NotPureVectorError,
    logger,
)
from src.layer1_settings.constants import ORIGIN_INDEX
from src.layer2_core import (
    Blade,
    GeometricForm,
    equals,
    homogeneous_grade,
    linear_combine,
    origin,
    wedge,
)

_ORIGIN = Blade.of([ORIGIN_INDEX])


def omega(x: GeometricForm) -> GeometricForm:
    """
    Boundary operator: linear, lowers grade by one.

    On a blade containing the origin index the index is removed with sign +1
    (0 is leftmost); blades without it are annihilated. Scalars map to 0.
    """
    return GeometricForm(
        x.frame,
        {blade.without_origin(): c for blade, c in x.terms.items() if blade.has_origin},
    )


def mass(x: GeometricForm) -> Fraction:
    """omega of the grade-1 part: the {0}-blade coefficient."""
    return x.coefficient(_ORIGIN)


def is_pure(x: GeometricForm) -> bool:
    """x lies in V_r = ker omega."""
    return omega(x).is_zero()


def is_point(x: GeometricForm) -> bool:
    return x.grades() == frozenset({1}) and mass(x) == 1


def require_point(x: GeometricForm, what: str = "argument") -> GeometricForm:
    if not is_point(x):
        logger.warning(f"Rejected {what}: not a unit-mass point")
        raise NotAPointError(what)
    return x


def require_vector(x: GeometricForm, what: str = "argument") -> GeometricForm:
    """Grade-1 (or zero) form of mass 0."""
    if not x.grades() <= frozenset({1}) or mass(x) != 0:
        logger.warning(f"Rejected {what}: not a vector")
        raise NotAVectorError(what)
    return x


def reduce_at(x: GeometricForm, p: GeometricForm) -> Tuple[GeometricForm, GeometricForm]:
    """
    Reduction formula x = p ^ omega(x) + omega(p ^ x).

    Args:
        x: Homogeneous form of grade 1..n+1 (the zero form is accepted)
        p: Unit-mass point

    Returns:
        (anchored part p ^ omega(x), pure part omega(p ^ x))

    Raises:
        NotHomogeneousError: x mixes grades
        GradeError: x is a non-zero scalar
        NotAPointError: p is not a unit-mass point
    """
    grade = homogeneous_grade(x)
    if grade == 0:
        raise GradeError(0, "reduction needs grade 1..n+1")
    require_point(p, "reduction point")
    anchored = wedge(p, omega(x))
    pure = omega(wedge(p, x))
    if not equals(linear_combine([(1, anchored), (1, pure)]), x):
        raise InvariantViolationError("x = p^omega(x) + omega(p^x)")
    logger.debug(f"reduce_at: grade {grade} split into {len(anchored.terms)}+{len(pure.terms)} terms")
    return anchored, pure


def omega_preimage(x: GeometricForm) -> GeometricForm:
    """
    A grade-(r+1) form whose boundary is x, for x in ker omega: O ^ x.

    Raises:
        NotPureVectorError: omega(x) != 0
    """
    if not is_pure(x):
        raise NotPureVectorError("omega(x) is not zero, so x is not a boundary")
    return wedge(origin(x.frame), x)

