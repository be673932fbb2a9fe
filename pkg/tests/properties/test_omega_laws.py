"""Linearity, nilpotence and the signed Leibniz rule of omega; the reduction formula."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from src.layer2_core import Frame, GeometricForm, equals, linear_combine, origin, wedge, wedge_all
from src.layer3_boundary import is_pure, omega, omega_preimage, reduce_at
from tests.strategies import (
    forms,
    frames,
    homogeneous_forms,
    random_form,
    random_point,
    small_rationals,
)


class TestOmegaLaws:
    """Hypothesis checks of the boundary operator."""

    @settings(max_examples=100, deadline=None)
    @given(st.data(), small_rationals(), small_rationals())
    def test_linearity(self, data, alpha, beta):
        frame = data.draw(frames())
        x, y = data.draw(forms(frame)), data.draw(forms(frame))
        assert equals(
            omega(linear_combine([(alpha, x), (beta, y)])),
            linear_combine([(alpha, omega(x)), (beta, omega(y))]),
        )

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_nilpotent(self, data):
        frame = data.draw(frames())
        assert omega(omega(data.draw(forms(frame)))).is_zero()

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_signed_leibniz(self, data):
        frame = data.draw(frames())
        r = data.draw(st.integers(0, frame.n + 1))
        x = data.draw(homogeneous_forms(frame, r))
        y = data.draw(forms(frame))
        assert equals(
            omega(wedge(x, y)),
            linear_combine([(1, wedge(omega(x), y)), ((-1) ** r, wedge(x, omega(y)))]),
        )

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_kernel_is_pure_and_is_an_image(self, data):
        frame = data.draw(frames())
        r = data.draw(st.integers(1, frame.n + 1))
        x = data.draw(homogeneous_forms(frame, r))
        closed = omega(x)
        assert is_pure(closed)
        assert not any(blade.has_origin for blade in closed.terms)
        assert equals(omega(omega_preimage(closed)), closed)
        assert equals(omega(wedge(origin(frame), closed)), closed)

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_origin_free_forms_are_closed(self, data):
        frame = data.draw(frames())
        r = data.draw(st.integers(0, frame.n))
        x = data.draw(homogeneous_forms(frame, r))
        pure = GeometricForm(frame, {b: c for b, c in x.terms.items() if not b.has_origin})
        assert omega(pure).is_zero()


class TestIdentityList:
    """The product rules for points, bivectors and trivectors of A3."""

    def setup_method(self):
        self.rng = random.Random(29)
        self.frame = Frame(3)

    def _grade(self, k):
        return random_form(self.rng, self.frame, k)

    def test_identities(self):
        for _ in range(100):
            x1, x2, x3, x4, x = (self._grade(1) for _ in range(5))
            s, s1, s2 = (self._grade(2) for _ in range(3))
            y = self._grade(3)

            assert equals(omega(x1 ^ x2), (omega(x1) ^ x2) - (x1 ^ omega(x2)))
            assert equals(
                omega(wedge_all([x1, x2, x3])),
                (omega(x1) ^ x2 ^ x3) + (omega(x2) ^ x3 ^ x1) + (omega(x3) ^ x1 ^ x2),
            )
            assert equals(omega(x ^ s), omega(s ^ x))
            assert equals(omega(x ^ s), (omega(x) ^ s) + (omega(s) ^ x))
            assert equals(omega(x ^ y), (omega(x) ^ y) - (x ^ omega(y)))
            assert equals(omega(s1 ^ s2), (omega(s1) ^ s2) + (s1 ^ omega(s2)))
            assert equals(
                omega(wedge_all([x1, x2, x3, x4])),
                (omega(x1) ^ x2 ^ x3 ^ x4)
                - (omega(x2) ^ x1 ^ x3 ^ x4)
                + (omega(x3) ^ x1 ^ x2 ^ x4)
                - (omega(x4) ^ x1 ^ x2 ^ x3),
            )


class TestReductionFormula:
    """x = p ^ omega(x) + omega(p ^ x) for every grade and point."""

    CASES = 1000

    def test_reduction(self):
        rng = random.Random(30)
        for case in range(self.CASES):
            frame = Frame(rng.choice((2, 3, 4)))
            grade = rng.randint(1, frame.n + 1)
            x = random_form(rng, frame, grade)
            p = random_point(rng, frame)
            anchored, pure = reduce_at(x, p)
            assert equals(wedge(p, omega(x)), anchored), case
            assert equals(omega(wedge(p, x)), pure), case
            assert equals(linear_combine([(1, anchored), (1, pure)]), x), case

    def test_pure_part_has_no_origin(self):
        rng = random.Random(31)
        frame = Frame(3)
        for _ in range(50):
            _, pure = reduce_at(random_form(rng, frame, 2), origin(frame))
            assert not any(b.has_origin for b in pure.terms)
