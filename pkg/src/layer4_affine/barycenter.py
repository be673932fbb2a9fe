"""Barycenters of weighted point systems."""

from typing import Sequence

from src.layer1_settings import ArityError, InvariantViolationError, NoBarycenterError, logger
from src.layer2_core import GeometricForm, linear_combine, scale
from src.layer3_boundary import mass
from .models import WeightedPoint


def normalize_point(x: GeometricForm) -> GeometricForm:
    """
    x / mass(x): the unit-mass point of a weighted grade-1 form.

    Raises:
        NoBarycenterError: mass(x) == 0 (x is a vector)
    """
    weight = mass(x)
    if weight == 0:
        raise NoBarycenterError()
    return scale(1 / weight, x)


def barycenter(system: Sequence[WeightedPoint]) -> WeightedPoint:
    """
    Barycenter G of sum alpha_i p_i with total weight alpha != 0.

    Returns:
        (G, alpha) with sum alpha_i p_i = alpha * G exactly

    Raises:
        ArityError: empty system
        NoBarycenterError: total weight is zero
    """
    system = list(system)
    if not system:
        raise ArityError("barycenter", "at least one weighted point", 0)

    combined = linear_combine([(wp.weight, wp.point) for wp in system])
    total = mass(combined)
    if total == 0:
        logger.warning(f"barycenter: zero total weight over {len(system)} points")
        raise NoBarycenterError()

    center = normalize_point(combined)
    deviation = linear_combine([(1, combined), (-total, center)])
    if not deviation.is_zero():
        raise InvariantViolationError("sum alpha_i p_i = alpha * G")
    return WeightedPoint(center, total)
