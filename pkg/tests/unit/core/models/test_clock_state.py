import numpy as np
import pytest

from src.core.errors import StateInputError
from src.core.models.clock_grid import ClockGrid
from src.core.models.clock_state import ClockState


@pytest.fixture
def grid():
    return ClockGrid.centered(1.0, 4)


def test_state_copies_and_freezes_coefficients(grid):
    data = np.zeros(grid.size, dtype=complex)
    data[4] = 1.0
    state = ClockState(grid=grid, coefficients=data)

    data[4] = 5.0
    assert state.coefficient(0) == 1.0
    with pytest.raises(ValueError):
        state.coefficients[0] = 2.0


def test_state_rejects_wrong_shape(grid):
    with pytest.raises(StateInputError):
        ClockState(grid=grid, coefficients=np.zeros(3))


def test_state_rejects_non_finite_values(grid):
    data = np.zeros(grid.size, dtype=complex)
    data[0] = np.nan
    with pytest.raises(StateInputError):
        ClockState(grid=grid, coefficients=data)


def test_norms_and_weighted_seminorm(grid):
    data = np.zeros(grid.size, dtype=complex)
    data[grid.position(-2)] = 3.0
    data[grid.position(1)] = 4j
    state = ClockState(grid=grid, coefficients=data)

    assert state.norm == pytest.approx(5.0)
    assert state.norm_squared == pytest.approx(25.0)
    assert state.weighted_seminorm == pytest.approx(2 * 3 + 1 * 4)


def test_normalized(grid):
    data = np.zeros(grid.size, dtype=complex)
    data[grid.position(0)] = 2.0
    state = ClockState(grid=grid, coefficients=data).normalized()

    assert state.is_normalized()


def test_zero_state_cannot_be_normalized(grid):
    with pytest.raises(StateInputError):
        ClockState(grid=grid, coefficients=np.zeros(grid.size)).normalized()
