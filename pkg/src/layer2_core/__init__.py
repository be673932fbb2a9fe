"""Layer 2: Graded core - frames, blades, geometric forms and the wedge algebra."""

from .frame import Frame, Blade
from .forms import (
    GeometricForm,
    require_same_frame,
    zero,
    scalar_form,
    origin,
    basis_vector,
    make_point,
    make_vector,
    scale,
    linear_combine,
    wedge,
    wedge_all,
    grade_part,
    homogeneous_grade,
    top_coefficient,
    equals,
)
from .schemas import (
    TermPayload,
    FormPayload,
    form_to_payload,
    form_to_json,
    form_from_payload,
    form_from_json,
)

__all__ = [
    "Frame",
    "Blade",
    "GeometricForm",
    "require_same_frame",
    "zero",
    "scalar_form",
    "origin",
    "basis_vector",
    "make_point",
    "make_vector",
    "scale",
    "linear_combine",
    "wedge",
    "wedge_all",
    "grade_part",
    "homogeneous_grade",
    "top_coefficient",
    "equals",
    "TermPayload",
    "FormPayload",
    "form_to_payload",
    "form_to_json",
    "form_from_payload",
    "form_from_json",
]
