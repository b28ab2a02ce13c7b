from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..errors import StateInputError
from .clock_grid import ClockGrid

ComplexVector = npt.NDArray[np.complex128]


@dataclass(frozen=True, eq=False)
class ClockState:
    """Immutable coefficient vector d^n over the grid's click basis"""
    grid: ClockGrid
    coefficients: ComplexVector

    def __post_init__(self) -> None:
        data = np.array(self.coefficients, dtype=np.complex128, copy=True)
        if data.shape != (self.grid.size,):
            raise StateInputError(
                f"expected {self.grid.size} coefficients, got shape {data.shape}"
            )
        if not np.all(np.isfinite(data)):
            raise StateInputError("state coefficients must be finite")
        data.setflags(write=False)
        object.__setattr__(self, "coefficients", data)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.coefficients, self.coefficients).real)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    @property
    def weighted_seminorm(self) -> float:
        return float(np.sum(np.abs(self.grid.indices()) * np.abs(self.coefficients)))

    def coefficient(self, n: int) -> complex:
        return complex(self.coefficients[self.grid.position(n)])

    def is_normalized(self, tolerance: float = 1e-10) -> bool:
        return abs(self.norm - 1.0) <= tolerance

    def normalized(self) -> "ClockState":
        norm = self.norm
        if norm == 0.0:
            raise StateInputError("cannot normalize the zero state")
        return self.with_updated_coefficients(self.coefficients / norm)

    def with_updated_coefficients(self, coefficients: ComplexVector) -> "ClockState":
        """Create a new instance on the same grid"""
        return ClockState(grid=self.grid, coefficients=coefficients)


@dataclass(frozen=True)
class MembershipDiagnostic:
    """How well a truncated state represents an element of the summable subspace"""
    norm: float
    weighted_seminorm: float
    boundary_mass: float


@dataclass(frozen=True)
class EvolvedState:
    state: ClockState
    mass_loss: float = field(default=0.0)
