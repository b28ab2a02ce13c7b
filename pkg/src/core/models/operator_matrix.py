from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt

from ..errors import ConfigurationError
from .clock_grid import ClockGrid

ComplexMatrix = npt.NDArray[np.complex128]


class OperatorLabel(str, Enum):
    H = "H"
    P_C = "P_C"
    T_C = "T_C"
    OTHER = "other"


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense operator in the click basis: (A phi)^m = sum_n entries[m, n] d^n"""
    grid: ClockGrid
    entries: ComplexMatrix
    label: OperatorLabel
    quadrature_error: float = 0.0
    symmetrized: bool = False
    hermitian_defect: float = field(init=False)

    def __post_init__(self) -> None:
        data = np.array(self.entries, dtype=np.complex128, copy=True)
        if data.shape != (self.grid.size, self.grid.size):
            raise ConfigurationError(
                f"operator shape {data.shape} does not match grid size {self.grid.size}"
            )
        data.setflags(write=False)
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "hermitian_defect", hermitian_defect(data))

    def entry(self, m: int, n: int) -> complex:
        return complex(self.entries[self.grid.position(m), self.grid.position(n)])

    def with_updated_entries(self, entries: ComplexMatrix, symmetrized: bool) -> "OperatorMatrix":
        return OperatorMatrix(
            grid=self.grid,
            entries=entries,
            label=self.label,
            quadrature_error=self.quadrature_error,
            symmetrized=symmetrized,
        )


def hermitian_defect(entries: ComplexMatrix) -> float:
    if entries.size == 0:
        return 0.0
    return float(np.max(np.abs(entries - entries.conj().T)))


@dataclass(frozen=True, eq=False)
class OperatorBundle:
    """The three assembled operators of one clock model, shared read-only"""
    hamiltonian: OperatorMatrix
    pc: OperatorMatrix
    tc: OperatorMatrix
