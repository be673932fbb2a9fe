"""Incidence predicates read off equalities between forms."""

from enum import Enum
from typing import Sequence

from src.layer1_settings import ArityError, DegenerateAxisError, DegenerateBasisError, logger
from src.layer2_core import GeometricForm, equals, linear_combine, require_same_frame, wedge_all
from src.layer3_boundary import require_point


class IncidenceKind(str, Enum):
    """Geometric statements and the form equalities that decide them."""
    COINCIDENT = "Coincident"                           # AB = 0
    COLLINEAR = "Collinear"                             # ABC = 0
    COPLANAR = "Coplanar"                               # ABCD = 0
    PARALLEL_SEGMENTS = "ParallelSegments"              # B - A = D - C
    SAME_SEGMENT = "SameSegment"                        # AB = CD
    SAME_TRIANGLE = "SameTriangle"                      # ABC = PQR
    SAME_TETRAHEDRON = "SameTetrahedron"                # ABCD = PQRS
    LINES_PARALLEL = "LinesParallel"                    # (B - A) CD = 0
    LINE_PARALLEL_TO_PLANE = "LineParallelToPlane"      # (B - A) CDE = 0
    ON_LINE = "OnLine"                                  # AB + BP + PA = 0
    ON_PLANE = "OnPlane"                                # ABC + BAP + CBP + ACP = 0


ARITY = {
    IncidenceKind.COINCIDENT: 2,
    IncidenceKind.COLLINEAR: 3,
    IncidenceKind.COPLANAR: 4,
    IncidenceKind.PARALLEL_SEGMENTS: 4,
    IncidenceKind.SAME_SEGMENT: 4,
    IncidenceKind.SAME_TRIANGLE: 6,
    IncidenceKind.SAME_TETRAHEDRON: 8,
    IncidenceKind.LINES_PARALLEL: 4,
    IncidenceKind.LINE_PARALLEL_TO_PLANE: 5,
    IncidenceKind.ON_LINE: 3,
    IncidenceKind.ON_PLANE: 4,
}


def _product(*points: GeometricForm) -> GeometricForm:
    return wedge_all(points)


def _difference(b: GeometricForm, a: GeometricForm) -> GeometricForm:
    return linear_combine([(1, b), (-1, a)])


def _require_line(a: GeometricForm, b: GeometricForm) -> None:
    if _product(a, b).is_zero():
        raise DegenerateAxisError()


def incidence(kind: IncidenceKind, points: Sequence[GeometricForm]) -> bool:
    """
    Evaluate an incidence statement exactly.

    Argument order follows the statement: ParallelSegments(A, B, C, D) compares
    segment AB with CD; OnLine(P, A, B) and OnPlane(P, A, B, C) test P.

    Raises:
        ArityError: wrong number of points
        NotAPointError: an argument is not a unit-mass point
        DegenerateAxisError: a line is given by coincident points
        DegenerateBasisError: a plane is given by collinear points
    """
    kind = IncidenceKind(kind)
    points = list(points)
    if len(points) != ARITY[kind]:
        raise ArityError(kind.value, ARITY[kind], len(points))
    if points:
        require_same_frame(*points)
    for i, point in enumerate(points):
        require_point(point, f"{kind.value} argument {i + 1}")

    if kind in (IncidenceKind.COINCIDENT, IncidenceKind.COLLINEAR, IncidenceKind.COPLANAR):
        result = _product(*points).is_zero()
    elif kind == IncidenceKind.PARALLEL_SEGMENTS:
        a, b, c, d = points
        result = equals(_difference(b, a), _difference(d, c))
    elif kind == IncidenceKind.SAME_SEGMENT:
        a, b, c, d = points
        result = equals(_product(a, b), _product(c, d))
    elif kind == IncidenceKind.SAME_TRIANGLE:
        result = equals(_product(*points[:3]), _product(*points[3:]))
    elif kind == IncidenceKind.SAME_TETRAHEDRON:
        result = equals(_product(*points[:4]), _product(*points[4:]))
    elif kind == IncidenceKind.LINES_PARALLEL:
        a, b, c, d = points
        _require_line(a, b)
        _require_line(c, d)
        result = _product(_difference(b, a), c, d).is_zero()
    elif kind == IncidenceKind.LINE_PARALLEL_TO_PLANE:
        a, b, c, d, e = points
        _require_line(a, b)
        if _product(c, d, e).is_zero():
            raise DegenerateBasisError("plane points are collinear")
        result = _product(_difference(b, a), c, d, e).is_zero()
    elif kind == IncidenceKind.ON_LINE:
        p, a, b = points
        _require_line(a, b)
        result = linear_combine([
            (1, _product(a, b)), (1, _product(b, p)), (1, _product(p, a)),
        ]).is_zero()
    else:
        p, a, b, c = points
        if _product(a, b, c).is_zero():
            raise DegenerateBasisError("plane points are collinear")
        result = linear_combine([
            (1, _product(a, b, c)), (1, _product(b, a, p)),
            (1, _product(c, b, p)), (1, _product(a, c, p)),
        ]).is_zero()

    logger.debug(f"incidence {kind.value} -> {result}")
    return result
