from typing import Iterable, Sequence

import numpy as np

from ..errors import StateInputError
from ..models.clock_grid import ClockGrid
from ..models.clock_state import ClockState, MembershipDiagnostic


def make_state(grid: ClockGrid, entries: Iterable[tuple[int, complex]]) -> ClockState:
    coefficients = np.zeros(grid.size, dtype=np.complex128)
    seen: set[int] = set()
    for index, value in entries:
        position = grid.position(index)
        if index in seen:
            raise StateInputError(f"duplicate index {index} in state entries")
        seen.add(index)
        coefficients[position] = complex(value)
    return ClockState(grid=grid, coefficients=coefficients)


def click_state(grid: ClockGrid, n: int) -> ClockState:
    return make_state(grid, [(n, 1.0)])


def superposition(grid: ClockGrid, indices: Sequence[int]) -> ClockState:
    """Equal-weight normalized superposition of clicks"""
    if not indices:
        raise StateInputError("superposition needs at least one index")
    amplitude = 1.0 / np.sqrt(len(indices))
    return make_state(grid, [(n, amplitude) for n in indices])


def random_state(grid: ClockGrid, seed: int, support: int = 2) -> ClockState:
    """Seeded normalized state supported on |n| <= support (clipped to the grid)"""
    rng = np.random.default_rng(seed)
    indices = [n for n in range(-support, support + 1) if grid.contains(n)]
    values = rng.normal(size=len(indices)) + 1j * rng.normal(size=len(indices))
    return make_state(grid, zip(indices, values)).normalized()


def diagnose_membership(state: ClockState) -> MembershipDiagnostic:
    mask = state.grid.boundary_mask()
    boundary_mass = float(np.sum(np.abs(state.coefficients[mask]) ** 2))
    return MembershipDiagnostic(
        norm=state.norm,
        weighted_seminorm=state.weighted_seminorm,
        boundary_mass=min(boundary_mass, state.norm_squared),
    )


def scalar_product(phi: ClockState, psi: ClockState) -> complex:
    _require_same_grid(phi, psi)
    return complex(np.vdot(phi.coefficients, psi.coefficients))


def state_to_entries(state: ClockState) -> list[tuple[int, float, float]]:
    """Non-zero coefficients as (index, re, im), indices strictly increasing"""
    return [
        (int(n), float(d.real), float(d.imag))
        for n, d in zip(state.grid.indices(), state.coefficients)
        if d != 0
    ]


def state_from_entries(grid: ClockGrid, entries: Iterable[Sequence[float]]) -> ClockState:
    triples = [tuple(entry) for entry in entries]
    if any(len(entry) != 3 for entry in triples):
        raise StateInputError("state entries must be [index, re, im] triples")
    indices = [int(entry[0]) for entry in triples]
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise StateInputError("state entry indices must be strictly increasing")
    return make_state(
        grid,
        [(int(n), complex(re, im)) for n, re, im in triples],
    )


def _require_same_grid(phi: ClockState, psi: ClockState) -> None:
    if phi.grid != psi.grid:
        raise StateInputError("states live on different grids")
