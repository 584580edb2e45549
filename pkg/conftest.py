"""Shared fixtures: the worked step paths."""
import pytest
from hypothesis import strategies as st

from regularity import make_step_path, constant_path


@pytest.fixture
def f1():
    """Single jump 0 -> 1 at 1/2."""
    return make_step_path(1, [0.5], [0.0, 1.0])


@pytest.fixture
def f2():
    """0 -> 1 at 1/3 and back to 0 at 2/3."""
    return make_step_path(1, [1.0 / 3.0, 2.0 / 3.0], [0.0, 1.0, 0.0])


@pytest.fixture
def staircase():
    """0 -> 1 -> 3 with jumps at 1/3 and 2/3."""
    return make_step_path(1, [1.0 / 3.0, 2.0 / 3.0], [0.0, 1.0, 3.0])


@pytest.fixture
def constant():
    return constant_path(3.0)


@pytest.fixture
def plane_path():
    """Two-dimensional path with a 3-4-5 jump."""
    return make_step_path(2, [0.25, 0.75], [[0.0, 0.0], [3.0, 4.0], [3.0, 0.0]])


# Breakpoints sit on the 1/1000 lattice and values are small integers, so
# ties and merged neighbours both occur.
@st.composite
def step_paths(draw, max_jumps: int = 8, dim: int = 1):
    ticks = sorted(draw(st.sets(st.integers(1, 999), max_size=max_jumps)))
    coord = st.integers(-4, 4).map(float)
    if dim == 1:
        values = draw(st.lists(coord, min_size=len(ticks) + 1, max_size=len(ticks) + 1))
    else:
        point = st.lists(coord, min_size=dim, max_size=dim)
        values = draw(st.lists(point, min_size=len(ticks) + 1, max_size=len(ticks) + 1))
    return make_step_path(dim, [k / 1000.0 for k in ticks], values)
