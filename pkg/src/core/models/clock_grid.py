import math
from dataclasses import dataclass
from typing import NewType

import numpy as np
import numpy.typing as npt

from ..errors import ConfigurationError, GridTooSmallError, IndexRangeError

ClockIndex = NewType('ClockIndex', int)
TimeResolution = NewType('TimeResolution', float)

MIN_THEOREM_SIDE = 4
BOUNDARY_FRACTION = 0.1


@dataclass(frozen=True)
class ClockGrid:
    """Truncated click index range [index_min, index_max] with resolution tau.

    A grid with ``cycle_length`` set is one full cycle of a periodic clock: the
    index after ``index_max`` is ``index_min`` and there is no truncation edge.
    """
    tau: TimeResolution
    index_min: ClockIndex
    index_max: ClockIndex
    cycle_length: int | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau > 0):
            raise ConfigurationError(f"tau must be a positive finite real, got {self.tau}")
        if not self.index_min <= 0 <= self.index_max:
            raise ConfigurationError(
                f"grid must satisfy index_min <= 0 <= index_max, "
                f"got [{self.index_min}, {self.index_max}]"
            )
        if self.cycle_length is not None and self.cycle_length != self.size:
            raise ConfigurationError(
                f"periodic grid must hold exactly one cycle of {self.cycle_length} "
                f"indices, got {self.size}"
            )

    @classmethod
    def centered(cls, tau: float, half_width: int) -> "ClockGrid":
        return cls(TimeResolution(tau), ClockIndex(-half_width), ClockIndex(half_width))

    @classmethod
    def centered_cycle(cls, tau: float, dimension: int) -> "ClockGrid":
        """Full-cycle grid with the wrap seam as far from index 0 as possible"""
        low = -(dimension // 2)
        return cls(
            TimeResolution(tau),
            ClockIndex(low),
            ClockIndex(dimension - 1 + low),
            cycle_length=dimension,
        )

    @property
    def size(self) -> int:
        return self.index_max - self.index_min + 1

    @property
    def periodic(self) -> bool:
        return self.cycle_length is not None

    def indices(self) -> npt.NDArray[np.int64]:
        return np.arange(self.index_min, self.index_max + 1, dtype=np.int64)

    def contains(self, n: int) -> bool:
        return self.index_min <= n <= self.index_max

    def position(self, n: int) -> int:
        """Array position of click index n"""
        if not self.contains(n):
            raise IndexRangeError(
                f"index {n} outside grid [{self.index_min}, {self.index_max}]"
            )
        return n - self.index_min

    def time_point(self, n: int) -> float:
        # n * tau, never accumulated, so time_point(-n) == -time_point(n) exactly
        return n * self.tau

    def pc_eigenvalue(self, n: int) -> float:
        if self._is_antipode(n):
            return 0.0
        return self.time_point(n)

    def pc_eigenvalues(self) -> npt.NDArray[np.float64]:
        values = self.indices().astype(np.float64) * self.tau
        if self._is_antipode(self.index_min):
            values[0] = 0.0
        return values

    def successor(self, n: int) -> int:
        if self.periodic and n == self.index_max:
            return int(self.index_min)
        return n + 1

    def edge_distance(self, n: int) -> int:
        """Steps from n to the truncation edge, or to the seam on periodic grids"""
        self.position(n)
        if self.periodic:
            return min(self.index_max + 1 - n, n - self.index_min)
        return min(self.index_max - n, n - self.index_min)

    def boundary_width(self) -> int:
        return max(1, math.ceil(BOUNDARY_FRACTION * self.size))

    def boundary_mask(self) -> npt.NDArray[np.bool_]:
        width = self.boundary_width()
        mask = np.zeros(self.size, dtype=bool)
        mask[:width] = True
        mask[-width:] = True
        return mask

    def require_theorem_ready(self) -> None:
        if self.periodic:
            return
        if -self.index_min < MIN_THEOREM_SIDE or self.index_max < MIN_THEOREM_SIDE:
            raise GridTooSmallError(
                f"theorem checks need at least {MIN_THEOREM_SIDE} indices on each side "
                f"of 0, got [{self.index_min}, {self.index_max}]"
            )

    def _is_antipode(self, n: int) -> bool:
        # midpoint of the sawtooth jump on even cycles
        return (
            self.cycle_length is not None
            and self.cycle_length % 2 == 0
            and n == self.index_min
            and self.index_min == -(self.cycle_length // 2)
        )
