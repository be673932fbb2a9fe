"""
Statics of applied forces read through degree-2 forms.

Two systems are equivalent exactly when their forms coincide; every other
operation here is a reading of that form: omega gives the resultant, the
reduction formula gives the Poinsot reduction, the wedge square gives the
scalar invariant.
"""

from fractions import Fraction
from typing import List, Sequence

from src.layer1_settings import (
    NAMED_CLASS_DIMENSION,
    ArityError,
    DegenerateAxisError,
    InvariantViolationError,
    NotPureVectorError,
    NotSingleForceError,
    UnsupportedDimensionError,
    logger,
)
from src.layer2_core import (
    GeometricForm,
    equals,
    linear_combine,
    origin,
    require_same_frame,
    top_coefficient,
    wedge,
    wedge_all,
)
from src.layer3_boundary import omega, require_point
from src.layer4_affine import (
    SimplexBasis,
    WeightedPoint,
    coords,
    factor_bivector,
    vector_quotient,
)
from .models import AppliedForce, ForceSystem, PoinsotReduction, SystemClass


def _require_named_dimension(operation: str, s: ForceSystem) -> None:
    if s.frame.n != NAMED_CLASS_DIMENSION:
        raise UnsupportedDimensionError(operation, NAMED_CLASS_DIMENSION, s.frame.n)


def system_form(s: ForceSystem) -> GeometricForm:
    """sum P_i ^ F_i; the empty system gives 0."""
    return linear_combine([(1, f.as_form()) for f in s.forces], frame=s.frame)


def resultant(s: ForceSystem) -> GeometricForm:
    """omega of the system form, i.e. the sum of the forces."""
    return omega(system_form(s))


def moment_ratio(s: ForceSystem, a: GeometricForm, b: GeometricForm) -> Fraction:
    """
    Axial moment about the line ab, up to the metric factor: sum vol(P_i, Q_i, a, b).

    Raises:
        DegenerateAxisError: a = b
    """
    require_same_frame(a, b)
    require_point(a, "axis point a")
    require_point(b, "axis point b")
    axis = wedge(a, b)
    if axis.is_zero():
        raise DegenerateAxisError()
    return top_coefficient(wedge(system_form(s), axis))


def equivalent(s1: ForceSystem, s2: ForceSystem) -> bool:
    """Mechanical equivalence: the degree-2 forms coincide."""
    return equals(system_form(s1), system_form(s2))


def reduce_poinsot(s: ForceSystem, p: GeometricForm) -> PoinsotReduction:
    """
    Resultant applied at p plus a couple: form = p ^ omega(form) + omega(p ^ form).

    Raises:
        NotAPointError: p is not a unit-mass point
    """
    require_point(p, "reduction point")
    form = system_form(s)
    reduction = PoinsotReduction(p, omega(form), omega(wedge(p, form)))
    if not equals(reduction.as_form(), form):
        raise InvariantViolationError("p ^ R + M = system form")
    logger.debug(f"reduce_poinsot: {len(s)} forces")
    return reduction


def scalar_invariant(s: ForceSystem) -> Fraction:
    """Top coefficient of form ^ form; zero iff the system is a single force or a couple."""
    _require_named_dimension("scalar_invariant", s)
    form = system_form(s)
    return top_coefficient(wedge(form, form))


def classify_system(s: ForceSystem) -> SystemClass:
    _require_named_dimension("classify_system", s)
    form = system_form(s)
    if form.is_zero():
        return SystemClass.NULL
    if omega(form).is_zero():
        return SystemClass.COUPLE
    if wedge(form, form).is_zero():
        return SystemClass.SINGLE_FORCE
    return SystemClass.WRENCH


def edge_decomposition(s: ForceSystem, basis: SimplexBasis) -> List[Fraction]:
    """
    Six coefficients alpha_ij with form = sum alpha_ij x_i ^ x_j over the
    edges of a non-degenerate tetrahedron, edges ordered 12, 13, 14, 23, 24, 34.
    """
    _require_named_dimension("edge_decomposition", s)
    require_same_frame(basis.vertices[0], origin(s.frame))
    return coords(system_form(s), basis, grade=2)


def single_force(s: ForceSystem) -> AppliedForce:
    """
    The one applied force equivalent to a SingleForce system.

    With form = O ^ R + M, the application point O + d solves d ^ R = M.

    Raises:
        NotSingleForceError: the system is Null, a Couple or a Wrench
    """
    system_class = classify_system(s)
    if system_class != SystemClass.SINGLE_FORCE:
        raise NotSingleForceError(system_class.value)
    form = system_form(s)
    o = origin(s.frame)
    force = omega(form)
    moment = omega(wedge(o, form))
    d = vector_quotient(-force, moment)
    applied = AppliedForce(o + d, force)
    if not equals(applied.as_form(), form):
        raise InvariantViolationError("single force reproduces the system form")
    return applied


def poinsot_pair(couple: GeometricForm, at: GeometricForm) -> ForceSystem:
    """
    Two opposite forces realizing a bivector: w at (at + u) and -w at `at`,
    where couple = u ^ w. The zero couple gives the empty system.

    Raises:
        NotAPointError: at is not a point
        NotPureVectorError: couple is not a single product of two vectors
    """
    frame = require_same_frame(couple, at)
    require_point(at, "couple anchor")
    if couple.is_zero():
        return ForceSystem(frame)
    pair = factor_bivector(couple)
    if pair is None:
        raise NotPureVectorError("couple is not a product of two vectors")
    u, w = pair
    system = ForceSystem(frame, (AppliedForce(at + u, w), AppliedForce(at, -w)))
    if not equals(system_form(system), couple):
        raise InvariantViolationError("Poinsot pair reproduces the couple")
    return system


def _material_form(points: Sequence[WeightedPoint]) -> GeometricForm:
    points = list(points)
    if not points:
        raise ArityError("material system", "at least one weighted point", 0)
    return linear_combine([(wp.weight, wp.point) for wp in points])


def static_moment(points: Sequence[WeightedPoint], plane: Sequence[GeometricForm]) -> Fraction:
    """
    Static moment of material points about the hyperplane through n points,
    up to the metric factor: sum alpha_i vol(P_i, plane...).
    """
    x = _material_form(points)
    plane = list(plane)
    if len(plane) != x.frame.n:
        raise ArityError("static moment plane", x.frame.n, len(plane))
    require_same_frame(x, *plane)
    for i, point in enumerate(plane):
        require_point(point, f"plane point {i + 1}")
    return top_coefficient(wedge(x, wedge_all(plane)))


def materially_equivalent(
    first: Sequence[WeightedPoint], second: Sequence[WeightedPoint]
) -> bool:
    """Systems of material points with equal static moments about every plane."""
    return equals(_material_form(first), _material_form(second))
