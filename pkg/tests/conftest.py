"""Shared fixtures: frames and the frame simplex."""

import pytest

from src.layer2_core import Frame, basis_vector, make_point, make_vector, origin


@pytest.fixture
def frame3():
    return Frame(3)


@pytest.fixture
def frame2():
    return Frame(2)


@pytest.fixture
def P(frame3):
    """Point factory in A3: P(1, 0, 0) = O + v1."""
    return lambda *coords: make_point(frame3, coords)


@pytest.fixture
def V(frame3):
    """Vector factory in A3."""
    return lambda *coords: make_vector(frame3, coords)


@pytest.fixture
def O(frame3):
    return origin(frame3)


@pytest.fixture
def v(frame3):
    """v[i] is the basis vector vi (v[0] unused)."""
    return [None] + [basis_vector(frame3, i) for i in range(1, 4)]


@pytest.fixture
def frame_simplex(P):
    return [P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)]
