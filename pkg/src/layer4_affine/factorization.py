"""Factorization of pure k-vectors into products of vectors, and related splittings."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.layer1_settings import (
    NAMED_CLASS_DIMENSION,
    GradeError,
    InvariantViolationError,
    NotPureVectorError,
    UnsupportedDimensionError,
    logger,
)
from src.layer2_core import (
    Blade,
    Frame,
    GeometricForm,
    basis_vector,
    equals,
    homogeneous_grade,
    linear_combine,
    require_same_frame,
    scale,
    wedge,
    wedge_all,
    zero,
)
from src.layer3_boundary import is_pure, omega, require_point
from src.utils.linear_algebra import solve_columns


def _require_named_dimension(operation: str, frame: Frame) -> None:
    if frame.n != NAMED_CLASS_DIMENSION:
        raise UnsupportedDimensionError(operation, NAMED_CLASS_DIMENSION, frame.n)


def _require_bivector(x: GeometricForm, what: str) -> None:
    grade = homogeneous_grade(x)
    if grade is not None and grade != 2:
        raise GradeError(grade, f"{what} must be a bivector")
    if not is_pure(x):
        raise NotPureVectorError(f"{what} has non-zero omega")


def _alternating_row(x: GeometricForm, p: int) -> GeometricForm:
    """sum_j B(p, j) v_j for the alternating matrix B of a pure bivector."""
    frame = x.frame
    terms = []
    for j in range(1, frame.n + 1):
        if j == p:
            continue
        if p < j:
            entry = x.coefficient(Blade.of((p, j)))
        else:
            entry = -x.coefficient(Blade.of((j, p)))
        if entry:
            terms.append((entry, basis_vector(frame, j)))
    return linear_combine(terms, frame=frame)


def factor_bivector(x: GeometricForm) -> Optional[Tuple[GeometricForm, GeometricForm]]:
    """
    Split a pure bivector as u ^ w by pivoting on its first non-zero entry.

    With pivot c = B[p][q], u = row_p / c and w = row_q. Works in any
    dimension; returns None for the zero form and when x is not a single
    product, which needs n >= 4.
    """
    _require_bivector(x, "bivector")
    if x.is_zero():
        return None
    pivot_blade, c = x.sorted_terms()[0]
    p, q = pivot_blade.indices
    u = scale(1 / c, _alternating_row(x, p))
    w = _alternating_row(x, q)
    if not equals(wedge(u, w), x):
        return None
    return u, w


def factor(x: GeometricForm) -> List[GeometricForm]:
    """
    Vectors whose product is x, for a pure bivector or trivector in n = 3.

    A vector factors as itself and the zero form as the empty product.

    Raises:
        UnsupportedDimensionError: n != 3
        NotPureVectorError: omega(x) != 0
        GradeError: grade 0
    """
    _require_named_dimension("factor", x.frame)
    grade = homogeneous_grade(x)
    if grade is None:
        return []
    if not is_pure(x):
        raise NotPureVectorError("only k-vectors factor into vectors")
    if grade == 0:
        raise GradeError(0, "scalars have no vector factorization")

    if grade == 1:
        factors = [x]
    elif grade == 2:
        pair = factor_bivector(x)
        if pair is None:
            raise InvariantViolationError("every bivector in n=3 is a product of two vectors")
        factors = list(pair)
    else:
        c = x.coefficient(Blade.of((1, 2, 3)))
        factors = [basis_vector(x.frame, 1), basis_vector(x.frame, 2), scale(c, basis_vector(x.frame, 3))]

    if not equals(wedge_all(factors), x):
        raise InvariantViolationError("wedge of factors = x")
    logger.debug(f"factor: grade {grade} into {len(factors)} vectors")
    return factors


def vector_quotient(y: GeometricForm, target: GeometricForm) -> GeometricForm:
    """
    A vector v with y ^ v = target, for a vector y and a pure bivector target.

    Raises:
        InvariantViolationError: y is not a factor of target
    """
    frame = target.frame
    blades = list(frame.vector_blades(2))
    images = [wedge(y, basis_vector(frame, i)) for i in range(1, frame.n + 1)]
    solution = solve_columns(
        [[image.coefficient(b) for b in blades] for image in images],
        [target.coefficient(b) for b in blades],
    )
    if solution is None:
        raise InvariantViolationError("y divides the bivector")
    return linear_combine(
        [(c, basis_vector(frame, i + 1)) for i, c in enumerate(solution)], frame=frame
    )


def common_factor(
    b1: GeometricForm, b2: GeometricForm
) -> Tuple[GeometricForm, GeometricForm, GeometricForm]:
    """
    Vectors (y, v, w) with b1 = y ^ v and b2 = y ^ w, for bivectors in n = 3.

    y lies on both planes: with b1 = a ^ b, y = tb*a - ta*b where ta, tb are
    the top coefficients of a ^ b2 and b ^ b2.
    """
    frame = require_same_frame(b1, b2)
    _require_named_dimension("common_factor", frame)
    _require_bivector(b1, "first bivector")
    _require_bivector(b2, "second bivector")

    if b1.is_zero() and b2.is_zero():
        y = basis_vector(frame, 1)
        return y, zero(frame), zero(frame)
    if b1.is_zero():
        y, w = factor_bivector(b2)
        return y, zero(frame), w
    a, b = factor_bivector(b1)
    if b2.is_zero():
        return a, b, zero(frame)

    top = Blade.of((1, 2, 3))
    ta = wedge(a, b2).coefficient(top)
    tb = wedge(b, b2).coefficient(top)
    if ta == 0 and tb == 0:
        y = a
    else:
        y = linear_combine([(tb, a), (-ta, b)], frame=frame)

    v = vector_quotient(y, b1)
    w = vector_quotient(y, b2)
    if not (equals(wedge(y, v), b1) and equals(wedge(y, w), b2)):
        raise InvariantViolationError("b1 = y ^ v and b2 = y ^ w")
    return y, v, w


@dataclass(frozen=True)
class Degree2Decomposition:
    """
    Points with x = PB + PC + CD + DP.

    b is None when omega(x) = 0; c and d are None when omega(P ^ x) = 0.
    """
    p: GeometricForm
    b: Optional[GeometricForm]
    c: Optional[GeometricForm]
    d: Optional[GeometricForm]

    def as_form(self) -> GeometricForm:
        terms = []
        if self.b is not None:
            terms.append((1, wedge(self.p, self.b)))
        if self.c is not None and self.d is not None:
            terms.extend([
                (1, wedge(self.p, self.c)),
                (1, wedge(self.c, self.d)),
                (1, wedge(self.d, self.p)),
            ])
        return linear_combine(terms, frame=self.p.frame)


def decompose_degree2(x: GeometricForm, p: GeometricForm) -> Degree2Decomposition:
    """
    Write a degree-2 form in A3 through four points, the first one given.

    B = P + omega(x); with omega(P ^ x) = u ^ w, C = P + u and D = P + w.

    Raises:
        UnsupportedDimensionError: n != 3
        GradeError: x is not of grade 2
        NotAPointError: p is not a point
    """
    frame = require_same_frame(x, p)
    _require_named_dimension("decompose_degree2", frame)
    require_point(p, "decomposition point")
    grade = homogeneous_grade(x)
    if grade is not None and grade != 2:
        raise GradeError(grade, "decomposition needs a degree-2 form")

    resultant = omega(x)
    b = None if resultant.is_zero() else p + resultant
    moment = omega(wedge(p, x))
    c = d = None
    if not moment.is_zero():
        pair = factor_bivector(moment)
        if pair is None:
            raise InvariantViolationError("every bivector in n=3 is a product of two vectors")
        u, w = pair
        c, d = p + u, p + w

    decomposition = Degree2Decomposition(p, b, c, d)
    if not equals(decomposition.as_form(), x):
        raise InvariantViolationError("x = PB + PC + CD + DP")
    return decomposition
