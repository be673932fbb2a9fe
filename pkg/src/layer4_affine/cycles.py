"""Boundary cycles of simplices and the polygon / closed-surface reducers."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from src.layer1_settings import (
    NAMED_CLASS_DIMENSION,
    ArityError,
    InvariantViolationError,
    NotClosedError,
    UnsupportedDimensionError,
    logger,
)
from src.layer2_core import (
    Blade,
    GeometricForm,
    equals,
    linear_combine,
    origin,
    require_same_frame,
    wedge,
    wedge_all,
)
from src.layer3_boundary import omega, require_point
from .factorization import factor, factor_bivector


class CycleKind(str, Enum):
    POLYGON = "Polygon"
    CLOSED_SURFACE = "ClosedSurface"


@dataclass(frozen=True)
class CycleReduction:
    """
    Result of reducing a closed polygon or closed surface.

    form is the bivector sum A_i A_{i+1} (polygon) or the trivector
    omega(O ^ sum A_i B_i C_i) (surface). coefficient is the signed area in
    the coordinate plane `plane` for polygons, or the v1v2v3 coefficient for
    surfaces; it is None for a polygon outside every coordinate plane.
    witness holds the points X, Y, Z (polygon) or X, Y, Z, T (surface) with
    P ^ form = XYZ(T) for P = X.
    """
    kind: CycleKind
    form: GeometricForm
    coefficient: Optional[Fraction]
    plane: Optional[Tuple[int, int]]
    witness: Tuple[GeometricForm, ...]


def _differences(points: Sequence[GeometricForm]) -> List[GeometricForm]:
    base = points[0]
    return [linear_combine([(1, p), (-1, base)]) for p in points[1:]]


def boundary_cycle(points: Sequence[GeometricForm]) -> GeometricForm:
    """
    AB + BC + CA for a triangle, BCD - ACD + ABD - ABC for a tetrahedron.

    Raises:
        ArityError: not 3 or 4 points
        NotAPointError: an argument is not a unit-mass point
    """
    points = list(points)
    if len(points) not in (3, 4):
        raise ArityError("boundary_cycle", "3 or 4 points", len(points))
    frame = require_same_frame(*points)
    for i, point in enumerate(points):
        require_point(point, f"cycle vertex {i + 1}")

    if len(points) == 3:
        a, b, c = points
        cycle = linear_combine([(1, wedge(a, b)), (1, wedge(b, c)), (1, wedge(c, a))])
    else:
        faces = []
        for omitted in range(4):
            face = [p for i, p in enumerate(points) if i != omitted]
            sign = -1 if omitted % 2 else 1
            faces.append((sign, wedge_all(face)))
        cycle = linear_combine(faces, frame=frame)

    if not equals(cycle, wedge_all(_differences(points))):
        raise InvariantViolationError("boundary cycle = (B - A)(C - A)...")
    return cycle


def _coordinate_plane(points: Sequence[GeometricForm]) -> Optional[Tuple[int, int]]:
    """First pair (a, b) such that every other coordinate is constant over the points."""
    n = points[0].frame.n
    first = points[0]
    for a, b in combinations(range(1, n + 1), 2):
        others = [i for i in range(1, n + 1) if i not in (a, b)]
        if all(
            p.coefficient(Blade.of([i])) == first.coefficient(Blade.of([i]))
            for p in points[1:]
            for i in others
        ):
            return a, b
    return None


def _reduce_polygon(points: Sequence[GeometricForm]) -> CycleReduction:
    points = list(points)
    if len(points) < 3:
        raise ArityError("polygon", "at least 3 points", len(points))
    frame = require_same_frame(*points)
    for i, point in enumerate(points):
        require_point(point, f"polygon vertex {i + 1}")

    count = len(points)
    form = linear_combine(
        [(1, wedge(points[i], points[(i + 1) % count])) for i in range(count)], frame=frame
    )
    if not omega(form).is_zero():
        raise InvariantViolationError("omega of a closed polygon is zero")

    plane = _coordinate_plane(points)
    coefficient = None
    if plane is not None:
        coefficient = form.coefficient(Blade.of(plane)) / 2

    x = points[0]
    witness: Tuple[GeometricForm, ...] = ()
    pair = factor_bivector(form) if not form.is_zero() else None
    if pair is not None:
        u, w = pair
        witness = (x, x + u, x + w)
        if not equals(wedge_all(witness), wedge(x, form)):
            raise InvariantViolationError("P ^ sum A_i A_{i+1} = XYZ")
    logger.debug(f"polygon: {count} vertices, plane={plane}, area={coefficient}")
    return CycleReduction(CycleKind.POLYGON, form, coefficient, plane, witness)


def _reduce_surface(faces: Sequence[Sequence[GeometricForm]]) -> CycleReduction:
    faces = [list(face) for face in faces]
    if not faces:
        raise ArityError("closed surface", "at least one face", 0)
    for face in faces:
        if len(face) != 3:
            raise ArityError("surface face", 3, len(face))
    points = [p for face in faces for p in face]
    frame = require_same_frame(*points)
    if frame.n != NAMED_CLASS_DIMENSION:
        raise UnsupportedDimensionError("closed surface", NAMED_CLASS_DIMENSION, frame.n)
    for i, point in enumerate(points):
        require_point(point, f"surface vertex {i + 1}")

    tripoints = linear_combine([(1, wedge_all(face)) for face in faces], frame=frame)
    if not omega(tripoints).is_zero():
        logger.warning(f"closed surface rejected: {len(faces)} faces do not close")
        raise NotClosedError()

    form = omega(wedge(origin(frame), tripoints))
    coefficient = form.coefficient(Blade.of((1, 2, 3)))
    x = faces[0][0]
    witness: Tuple[GeometricForm, ...] = ()
    if not form.is_zero():
        witness = (x, *(x + u for u in factor(form)))
        if not equals(wedge_all(witness), wedge(x, tripoints)):
            raise InvariantViolationError("P ^ sum A_i B_i C_i = XYZT")
    logger.debug(f"closed surface: {len(faces)} faces, volume={coefficient}")
    return CycleReduction(CycleKind.CLOSED_SURFACE, form, coefficient, None, witness)


def reduce_cycle(kind: CycleKind, elements) -> CycleReduction:
    """
    Reduce a closed polygon (ordered points) or closed surface (point triples).

    The reduced form does not depend on the auxiliary point P: for a polygon
    P ^ form is the same for every P in its plane, for a surface every P
    gives the same top coefficient.

    Raises:
        ArityError: too few vertices or a face that is not a triangle
        NotClosedError: surface whose face bivectors do not cancel
        UnsupportedDimensionError: surface outside n = 3
    """
    kind = CycleKind(kind)
    if kind == CycleKind.POLYGON:
        return _reduce_polygon(elements)
    return _reduce_surface(elements)
