"""Subcommand handlers: each turns parsed arguments into a result payload."""

import sys
from argparse import Namespace
from typing import List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from src.layer1_settings import InputValidationError, get_logger
from src.layer2_core import Frame, GeometricForm, form_to_payload, homogeneous_grade, make_point
from src.layer3_boundary import classify, omega, reduce_at
from src.layer4_affine import (
    CycleKind,
    IncidenceKind,
    SimplexBasis,
    WeightedPoint,
    barycenter,
    coords,
    dual_functional,
    factor,
    incidence,
    quotient_coords,
    reduce_cycle,
    vol,
)
from src.layer5_mechanics import (
    ForceSystem,
    classify_system,
    edge_decomposition,
    equivalent,
    reduce_poinsot,
    scalar_invariant,
    system_from_json,
)
from src.layer7_oracle import canonicalize, free_equals, free_form_from_json
from src.utils.rationals import approximate, format_rational
from .expressions import evaluate_text
from .schemas import (
    BarycenterInput,
    BarycenterPayload,
    ClassificationPayload,
    CoordsPayload,
    FactorPayload,
    KindPayload,
    OracleCheckPayload,
    PoinsotPayload,
    PolygonPayload,
    ReducePayload,
    SurfaceInput,
    SurfacePayload,
    TruthPayload,
    point_approximation,
    point_coordinates,
    scalar_list_payload,
    scalar_payload,
)

logger = get_logger(__name__)


def read_input(value: Optional[str], what: str) -> str:
    """The argument itself, or standard input when it was omitted."""
    text = value if value is not None else sys.stdin.read()
    if not text.strip():
        raise InputValidationError(what, "empty input")
    return text


def _form(args: Namespace, frame: Frame) -> GeometricForm:
    return evaluate_text(read_input(args.expr, "expression"), frame)


def _forms(texts: Sequence[str], frame: Frame) -> List[GeometricForm]:
    return [evaluate_text(text, frame) for text in texts]


def _model(model: type, text: str, what: str) -> BaseModel:
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise InputValidationError(what, str(e)) from e


def _basis(texts: Sequence[str], frame: Frame) -> SimplexBasis:
    return SimplexBasis(tuple(_forms(texts, frame)))


def run_eval(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    return form_to_payload(_form(args, frame), approx)


def run_omega(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    return form_to_payload(omega(_form(args, frame)), approx)


def run_reduce(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    anchored, pure = reduce_at(_form(args, frame), evaluate_text(args.at, frame))
    return ReducePayload(anchored=form_to_payload(anchored, approx), pure=form_to_payload(pure, approx))


def run_classify(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    result = classify(_form(args, frame))
    return ClassificationPayload(
        kind=result.kind.value,
        grade=result.grade,
        pure=result.pure,
        self_wedge_zero=result.self_wedge_zero,
    )


def run_barycenter(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    payload = _model(BarycenterInput, read_input(args.system, "weighted points"), "weighted points")
    system = [WeightedPoint.at(frame, p.at, p.weight) for p in payload.points]
    center = barycenter(system)
    return BarycenterPayload(
        point=point_coordinates(center.point),
        weight=format_rational(center.weight),
        point_approx=point_approximation(center.point, approx),
        weight_approx=approximate(center.weight, approx) if approx else None,
    )


def run_vol(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    return scalar_payload(vol(_forms(args.points, frame)), approx)


def run_coords(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    x = _form(args, frame)
    basis = _basis(args.simplex, frame)
    solve = quotient_coords if args.quotient else coords
    values = solve(x, basis, grade=args.grade)
    grade = args.grade if args.grade is not None else homogeneous_grade(x)
    return CoordsPayload(grade=grade, coords=scalar_list_payload(values, approx))


def run_area(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    reduction = reduce_cycle(CycleKind.POLYGON, _forms(args.points, frame))
    return PolygonPayload(
        form=form_to_payload(reduction.form, approx),
        area=scalar_payload(reduction.coefficient, approx) if reduction.coefficient is not None else None,
        plane=list(reduction.plane) if reduction.plane is not None else None,
        witness=[point_coordinates(p) for p in reduction.witness],
        witness_approx=_witness_approximation(reduction.witness, approx),
    )


def run_volume(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    payload = _model(SurfaceInput, read_input(args.surface, "surface"), "surface")
    faces = [[make_point(frame, p) for p in face] for face in payload.faces]
    reduction = reduce_cycle(CycleKind.CLOSED_SURFACE, faces)
    return SurfacePayload(
        form=form_to_payload(reduction.form, approx),
        volume=scalar_payload(reduction.coefficient, approx),
        witness=[point_coordinates(p) for p in reduction.witness],
        witness_approx=_witness_approximation(reduction.witness, approx),
    )


def _witness_approximation(
    witness: Sequence[GeometricForm], approx: Optional[int]
) -> Optional[List[List[str]]]:
    if not approx:
        return None
    return [point_approximation(p, approx) for p in witness]


def _system(text: Optional[str], frame: Frame) -> ForceSystem:
    return system_from_json(read_input(text, "force system"), frame)


def run_forces(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    action = args.action
    if action == "equiv":
        first = _system(args.system, frame)
        second = _system(args.other, frame)
        return TruthPayload(holds=equivalent(first, second))

    system = _system(args.system, frame)
    if action == "reduce":
        if args.at is None:
            raise InputValidationError("--at", "forces reduce needs a reduction point")
        reduction = reduce_poinsot(system, evaluate_text(args.at, frame))
        return PoinsotPayload(
            at=point_coordinates(reduction.at),
            at_approx=point_approximation(reduction.at, approx),
            resultant=form_to_payload(reduction.resultant, approx),
            couple=form_to_payload(reduction.couple, approx),
        )
    if action == "invariant":
        return scalar_payload(scalar_invariant(system), approx)
    if action == "classify":
        return KindPayload(kind=classify_system(system).value)
    if not args.simplex:
        raise InputValidationError("--simplex", "forces edges needs the tetrahedron vertices")
    values = edge_decomposition(system, _basis(args.simplex, frame))
    return CoordsPayload(grade=2, coords=scalar_list_payload(values, approx))


def run_oracle(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    first = free_form_from_json(read_input(args.form, "free form"), frame.n)
    if args.action == "canon":
        return form_to_payload(canonicalize(first), approx)
    second = free_form_from_json(read_input(args.other, "free form"), frame.n)
    result = OracleCheckPayload(
        free_equal=free_equals(first, second),
        canonical_equal=canonicalize(first) == canonicalize(second),
    )
    if result.free_equal != result.canonical_equal:
        logger.error("oracle and blade engine disagree")
    return result


def run_incidence(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    return TruthPayload(holds=incidence(IncidenceKind(args.kind), _forms(args.points, frame)))


def run_dual(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    phi, x = _forms([args.phi, args.x], frame)
    return scalar_payload(dual_functional(phi, x), approx)


def run_factor(args: Namespace, frame: Frame, approx: Optional[int]) -> BaseModel:
    return FactorPayload(factors=[form_to_payload(v, approx) for v in factor(_form(args, frame))])


HANDLERS = {
    "eval": run_eval,
    "omega": run_omega,
    "reduce": run_reduce,
    "classify": run_classify,
    "barycenter": run_barycenter,
    "vol": run_vol,
    "coords": run_coords,
    "area": run_area,
    "volume": run_volume,
    "forces": run_forces,
    "oracle": run_oracle,
    "incidence": run_incidence,
    "dual": run_dual,
    "factor": run_factor,
}
