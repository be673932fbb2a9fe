"""Layer 4: Affine geometry - volume, barycenters, incidence, coordinates, factorization, cycles."""

from .models import WeightedPoint, SimplexBasis
from .volume import vol, volume_functional, same_orientation, same_extension, dual_functional
from .barycenter import normalize_point, barycenter
from .incidence import IncidenceKind, ARITY, incidence
from .coordinates import induced_basis, coords, quotient_coords
from .factorization import (
    factor_bivector,
    factor,
    vector_quotient,
    common_factor,
    Degree2Decomposition,
    decompose_degree2,
)
from .cycles import CycleKind, CycleReduction, boundary_cycle, reduce_cycle

__all__ = [
    "WeightedPoint",
    "SimplexBasis",
    "vol",
    "volume_functional",
    "same_orientation",
    "same_extension",
    "dual_functional",
    "normalize_point",
    "barycenter",
    "IncidenceKind",
    "ARITY",
    "incidence",
    "induced_basis",
    "coords",
    "quotient_coords",
    "factor_bivector",
    "factor",
    "vector_quotient",
    "common_factor",
    "Degree2Decomposition",
    "decompose_degree2",
    "CycleKind",
    "CycleReduction",
    "boundary_cycle",
    "reduce_cycle",
]
