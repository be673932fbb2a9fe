"""Hypothesis strategies and seeded generators for forms, points and systems."""

import random
from fractions import Fraction
from typing import List, Optional

from hypothesis import strategies as st

from src.layer2_core import Blade, Frame, GeometricForm, make_point, make_vector

BOUND = 10 ** 6


# Hypothesis strategies


def rationals(bound: int = BOUND):
    return st.builds(
        Fraction,
        st.integers(min_value=-bound, max_value=bound),
        st.integers(min_value=1, max_value=bound),
    )


def small_rationals():
    return rationals(bound=20)


@st.composite
def frames(draw, dimensions=(2, 3, 4)):
    return Frame(draw(st.sampled_from(dimensions)))


@st.composite
def homogeneous_forms(draw, frame: Frame, grade: int, coefficients=None):
    coefficients = coefficients or small_rationals()
    blades = list(frame.blades(grade))
    values = draw(st.lists(coefficients, min_size=len(blades), max_size=len(blades)))
    return GeometricForm(frame, dict(zip(blades, values)))


@st.composite
def forms(draw, frame: Frame, coefficients=None):
    """Arbitrary (generally inhomogeneous) forms."""
    coefficients = coefficients or small_rationals()
    terms = {}
    for k in range(frame.n + 2):
        for blade in frame.blades(k):
            if draw(st.booleans()):
                terms[blade] = draw(coefficients)
    return GeometricForm(frame, terms)


@st.composite
def points(draw, frame: Frame, coefficients=None):
    coefficients = coefficients or small_rationals()
    return make_point(frame, draw(st.lists(coefficients, min_size=frame.n, max_size=frame.n)))


@st.composite
def vectors(draw, frame: Frame, coefficients=None):
    coefficients = coefficients or small_rationals()
    return make_vector(frame, draw(st.lists(coefficients, min_size=frame.n, max_size=frame.n)))


# Seeded generators for the fixed-count checks


def random_rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_coords(rng: random.Random, n: int, bound: int = 20) -> List[Fraction]:
    return [random_rational(rng, bound) for _ in range(n)]


def random_point(rng: random.Random, frame: Frame, bound: int = 20) -> GeometricForm:
    return make_point(frame, random_coords(rng, frame.n, bound))


def random_vector(rng: random.Random, frame: Frame, bound: int = 20) -> GeometricForm:
    return make_vector(frame, random_coords(rng, frame.n, bound))


def random_form(
    rng: random.Random, frame: Frame, grade: Optional[int] = None, bound: int = 20
) -> GeometricForm:
    """Homogeneous of `grade` when given, else a random mixture of grades."""
    grades = [grade] if grade is not None else range(frame.n + 2)
    terms = {}
    for k in grades:
        for blade in frame.blades(k):
            if grade is not None or rng.random() < 0.5:
                terms[blade] = random_rational(rng, bound)
    return GeometricForm(frame, terms)


def random_pure_form(rng: random.Random, frame: Frame, grade: int, bound: int = 20) -> GeometricForm:
    """Random element of V_grade (no origin index)."""
    return GeometricForm(
        frame, {b: random_rational(rng, bound) for b in frame.vector_blades(grade)}
    )


def blade(*indices: int) -> Blade:
    return Blade.of(indices)
