"""
Forms as formal sums of point tuples, compared through volumes.

Nothing here touches the blade engine except `canonicalize`: equality of two
free forms is decided by evaluating determinants of homogeneous coordinate
matrices, so the blade engine can be checked against it.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import List, Sequence, Tuple

from src.layer1_settings import (
    MAX_DIMENSION,
    ArityError,
    DimensionError,
    FrameMismatchError,
    GradeError,
    logger,
)
from src.layer2_core import Frame, GeometricForm, linear_combine, make_point, wedge_all
from src.utils.linear_algebra import determinant
from src.utils.rationals import ScalarLike, to_scalar

Point = Tuple[Fraction, ...]
FreeTerm = Tuple[Fraction, Tuple[Point, ...]]


@dataclass(frozen=True)
class FreeForm:
    """sum_i alpha_i P_(i,1) ... P_(i,k) with every point given by its n affine coordinates."""
    k: int
    n: int
    terms: Tuple[FreeTerm, ...] = ()

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIMENSION:
            raise DimensionError(self.n, MAX_DIMENSION)
        if not 0 <= self.k <= self.n + 1:
            raise GradeError(self.k, f"free form degree must lie in 0..{self.n + 1}")
        normalized = []
        for coefficient, points in self.terms:
            points = tuple(tuple(to_scalar(c, "coordinate") for c in p) for p in points)
            if len(points) != self.k:
                raise ArityError("free form tuple", self.k, len(points))
            for p in points:
                if len(p) != self.n:
                    raise ArityError("free form point", self.n, len(p))
            normalized.append((to_scalar(coefficient, "coeff"), points))
        object.__setattr__(self, "terms", tuple(normalized))

    @classmethod
    def of(
        cls, n: int, k: int, terms: Sequence[Tuple[ScalarLike, Sequence[Sequence[ScalarLike]]]]
    ) -> "FreeForm":
        return cls(k, n, tuple((c, tuple(tuple(p) for p in pts)) for c, pts in terms))


def frame_simplex(n: int) -> List[Point]:
    """O, O+v1, ..., O+vn as coordinate tuples."""
    vertices = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        vertices.append(tuple(Fraction(1 if j == i else 0) for j in range(n)))
    return vertices


def free_vol(points: Sequence[Sequence[ScalarLike]]) -> Fraction:
    """Determinant of the rows (1, c_1, ..., c_n) of n+1 points."""
    points = [tuple(to_scalar(c, "coordinate") for c in p) for p in points]
    if not points:
        raise ArityError("free_vol", "n+1 points", 0)
    n = len(points[0])
    if len(points) != n + 1 or any(len(p) != n for p in points):
        raise ArityError("free_vol", n + 1, len(points))
    return determinant([[Fraction(1), *p] for p in points])


def _require_compatible(f: FreeForm, g: FreeForm) -> None:
    if f.n != g.n:
        raise FrameMismatchError(f.n, g.n)
    if f.k != g.k:
        raise GradeError(g.k, f"free forms of degree {f.k} and {g.k} cannot be compared")


def free_combine(terms: Sequence[Tuple[ScalarLike, FreeForm]]) -> FreeForm:
    """Formal combination sum alpha_j f_j (tuples are kept, never merged)."""
    terms = list(terms)
    if not terms:
        raise ArityError("free_combine", "at least one free form", 0)
    first = terms[0][1]
    combined: List[FreeTerm] = []
    for scalar, f in terms:
        _require_compatible(first, f)
        factor = to_scalar(scalar)
        combined.extend((factor * c, pts) for c, pts in f.terms)
    return FreeForm(first.k, first.n, tuple(combined))


def free_wedge(f: FreeForm, g: FreeForm) -> FreeForm:
    """Product by tuple concatenation."""
    if f.n != g.n:
        raise FrameMismatchError(f.n, g.n)
    k = f.k + g.k
    if k > f.n + 1:
        raise GradeError(k, f"product degree exceeds n+1={f.n + 1}")
    return FreeForm(k, f.n, tuple(
        (cf * cg, pf + pg) for cf, pf in f.terms for cg, pg in g.terms
    ))


def free_omega(f: FreeForm) -> FreeForm:
    """omega(P_0 ... P_k) = sum_i (-1)^i P_0 ... (P_i omitted) ... P_k."""
    if f.k == 0:
        return FreeForm(0, f.n, ())
    terms = []
    for c, points in f.terms:
        for i in range(len(points)):
            sign = -1 if i % 2 else 1
            terms.append((sign * c, points[:i] + points[i + 1:]))
    return FreeForm(f.k - 1, f.n, tuple(terms))


def free_equals(f: FreeForm, g: FreeForm) -> bool:
    """
    f = g in the quotient: sum over f - g of alpha * vol(tuple, completion)
    vanishes for every ordered completion by frame-simplex vertices.
    """
    _require_compatible(f, g)
    difference = free_combine([(1, f), (-1, g)])
    vertices = frame_simplex(f.n)
    evaluations = 0
    for completion in permutations(vertices, f.n + 1 - f.k):
        total = sum(
            (c * free_vol(points + completion) for c, points in difference.terms),
            Fraction(0),
        )
        evaluations += 1
        if total != 0:
            logger.debug(f"free_equals: differ after {evaluations} completions")
            return False
    return True


def canonicalize(f: FreeForm) -> GeometricForm:
    """sum alpha * (wedge of the tuple's points) in the blade engine."""
    frame = Frame(f.n)
    return linear_combine(
        [(c, wedge_all([make_point(frame, p) for p in points], frame=frame)) for c, points in f.terms],
        frame=frame,
    )
