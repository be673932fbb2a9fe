"""Geometric forms in the canonical frame basis and the graded wedge algebra."""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Tuple

from src.layer1_settings import (
    ArityError,
    FrameMismatchError,
    InputValidationError,
    NotHomogeneousError,
    logger,
)
from src.layer1_settings.constants import ORIGIN_INDEX
from src.utils.rationals import ScalarLike, to_scalar
from .frame import Blade, Frame


class GeometricForm:
    """
    Element of G(A_n): a map from blades to exact rational coefficients.

    Instances are immutable; zero coefficients are never stored, so structural
    equality is mathematical equality.
    """

    __slots__ = ("_frame", "_terms")

    def __init__(self, frame: Frame, terms: Optional[Mapping[Blade, ScalarLike]] = None):
        pruned: Dict[Blade, Fraction] = {}
        for blade, coefficient in (terms or {}).items():
            if not blade.fits(frame):
                raise InputValidationError(
                    "blade", f"{list(blade.indices)} has an index above n={frame.n}"
                )
            value = to_scalar(coefficient, "coefficient")
            if value:
                pruned[blade] = value
        object.__setattr__(self, "_frame", frame)
        object.__setattr__(self, "_terms", pruned)

    def __setattr__(self, name, value):
        raise AttributeError("GeometricForm is immutable")

    @property
    def frame(self) -> Frame:
        return self._frame

    @property
    def terms(self) -> Mapping[Blade, Fraction]:
        """Read-only view of the non-zero coefficients."""
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> Tuple[Tuple[Blade, Fraction], ...]:
        """Terms ordered by grade, then lexicographic blade order."""
        return tuple(sorted(self._terms.items(), key=lambda item: item[0].sort_key()))

    def coefficient(self, blade: Blade) -> Fraction:
        return self._terms.get(blade, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> FrozenSet[int]:
        return frozenset(blade.grade for blade in self._terms)

    # Operator sugar; the module-level functions are the reference operations.

    def __add__(self, other: "GeometricForm") -> "GeometricForm":
        if not isinstance(other, GeometricForm):
            return NotImplemented
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "GeometricForm") -> "GeometricForm":
        if not isinstance(other, GeometricForm):
            return NotImplemented
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "GeometricForm":
        return scale(-1, self)

    def __rmul__(self, scalar: ScalarLike) -> "GeometricForm":
        if isinstance(scalar, GeometricForm):
            return NotImplemented
        return scale(scalar, self)

    def __mul__(self, scalar: ScalarLike) -> "GeometricForm":
        if isinstance(scalar, GeometricForm):
            return NotImplemented
        return scale(scalar, self)

    def __truediv__(self, scalar: ScalarLike) -> "GeometricForm":
        return scale(1 / to_scalar(scalar), self)

    def __xor__(self, other: "GeometricForm") -> "GeometricForm":
        if not isinstance(other, GeometricForm):
            return NotImplemented
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeometricForm):
            return NotImplemented
        return self._frame == other._frame and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._frame, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"GeometricForm(n={self._frame.n}, 0)"
        labels = self._frame.labels
        parts = []
        for blade, coefficient in self.sorted_terms():
            name = "^".join(labels[i] for i in blade.indices) or "1"
            parts.append(f"{coefficient}*{name}")
        return f"GeometricForm(n={self._frame.n}, {' + '.join(parts)})"


def require_same_frame(*forms: GeometricForm) -> Frame:
    """Common frame of the operands."""
    frame = forms[0].frame
    for form in forms[1:]:
        if form.frame != frame:
            raise FrameMismatchError(frame.n, form.frame.n)
    return frame


def zero(frame: Frame) -> GeometricForm:
    return GeometricForm(frame)


def scalar_form(frame: Frame, value: ScalarLike) -> GeometricForm:
    """Grade-0 form."""
    return GeometricForm(frame, {Blade(0): value})


def origin(frame: Frame) -> GeometricForm:
    """The origin unit O."""
    return GeometricForm(frame, {Blade.of([ORIGIN_INDEX]): 1})


def basis_vector(frame: Frame, i: int) -> GeometricForm:
    """The basis vector vi, 1 <= i <= n."""
    if not 1 <= i <= frame.n:
        raise ArityError("basis vector index", f"1..{frame.n}", i)
    return GeometricForm(frame, {Blade.of([i]): 1})


def _grade_one(frame: Frame, coords: Sequence[ScalarLike], mass: int, what: str) -> GeometricForm:
    if len(coords) != frame.n:
        raise ArityError(f"{what} coordinates", frame.n, len(coords))
    terms: Dict[Blade, ScalarLike] = {Blade.of([i + 1]): c for i, c in enumerate(coords)}
    if mass:
        terms[Blade.of([ORIGIN_INDEX])] = mass
    return GeometricForm(frame, terms)


def make_point(frame: Frame, coords: Sequence[ScalarLike]) -> GeometricForm:
    """The point O + sum ci vi (mass 1)."""
    return _grade_one(frame, coords, 1, "point")


def make_vector(frame: Frame, coords: Sequence[ScalarLike]) -> GeometricForm:
    """The vector sum ci vi (mass 0)."""
    return _grade_one(frame, coords, 0, "vector")


def scale(scalar: ScalarLike, x: GeometricForm) -> GeometricForm:
    factor = to_scalar(scalar)
    return GeometricForm(x.frame, {blade: factor * c for blade, c in x.terms.items()})


def linear_combine(
    terms: Iterable[Tuple[ScalarLike, GeometricForm]],
    frame: Optional[Frame] = None,
) -> GeometricForm:
    """
    Exact combination sum_i alpha_i * x_i.

    Args:
        terms: (scalar, form) pairs sharing one frame
        frame: Frame of the result when terms is empty

    Raises:
        FrameMismatchError: forms over different frames
        ArityError: empty terms and no frame given
    """
    terms = list(terms)
    if not terms:
        if frame is None:
            raise ArityError("linear_combine", "at least one term or a frame", 0)
        return zero(frame)
    result_frame = require_same_frame(*(form for _, form in terms))
    if frame is not None and frame != result_frame:
        raise FrameMismatchError(frame.n, result_frame.n)
    accumulated: Dict[Blade, Fraction] = {}
    for scalar, form in terms:
        factor = to_scalar(scalar)
        if not factor:
            continue
        for blade, coefficient in form.terms.items():
            accumulated[blade] = accumulated.get(blade, Fraction(0)) + factor * coefficient
    return GeometricForm(result_frame, accumulated)


def wedge(a: GeometricForm, b: GeometricForm) -> GeometricForm:
    """
    Exterior product a ^ b.

    Bilinear extension of the blade rule: zero when the index sets meet,
    otherwise the merged blade signed by the merge permutation. Grades above
    n+1 cannot arise since such blades would repeat an index.
    """
    frame = require_same_frame(a, b)
    accumulated: Dict[Blade, Fraction] = {}
    for blade_a, coeff_a in a.terms.items():
        for blade_b, coeff_b in b.terms.items():
            sign = blade_a.wedge_sign(blade_b)
            if not sign:
                continue
            merged = Blade(blade_a.mask | blade_b.mask)
            accumulated[merged] = accumulated.get(merged, Fraction(0)) + sign * coeff_a * coeff_b
    return GeometricForm(frame, accumulated)


def wedge_all(forms: Sequence[GeometricForm], frame: Optional[Frame] = None) -> GeometricForm:
    """Left-to-right product of forms; the empty product is the scalar 1."""
    if not forms:
        if frame is None:
            raise ArityError("wedge_all", "at least one form or a frame", 0)
        return scalar_form(frame, 1)
    result = forms[0]
    for form in forms[1:]:
        result = wedge(result, form)
    return result


def grade_part(x: GeometricForm, k: int) -> GeometricForm:
    """Projection onto F_k."""
    x.frame.check_grade(k)
    return GeometricForm(x.frame, {b: c for b, c in x.terms.items() if b.grade == k})


def homogeneous_grade(x: GeometricForm) -> Optional[int]:
    """
    The single grade of x, or None for the zero form.

    Raises:
        NotHomogeneousError: x mixes grades
    """
    grades = x.grades()
    if not grades:
        return None
    if len(grades) > 1:
        raise NotHomogeneousError(grades)
    return next(iter(grades))


def top_coefficient(x: GeometricForm) -> Fraction:
    """Coefficient of the full blade {0, 1, ..., n}: z / (O v1 ... vn)."""
    return x.coefficient(x.frame.full_blade)


def equals(a: GeometricForm, b: GeometricForm) -> bool:
    """Exact coefficient-wise equality over a common frame."""
    require_same_frame(a, b)
    result = a._terms == b._terms
    logger.debug(f"equals: {len(a.terms)} vs {len(b.terms)} terms -> {result}")
    return result
