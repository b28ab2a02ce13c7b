import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import numpy.typing as npt

from ..errors import ConfigurationError

MIN_CYCLE_DIMENSION = 8


@dataclass(frozen=True)
class ProfileFunction:
    """Profile g on [-tau, +tau] of a two-component clock sector"""
    g: Callable[[float], complex]
    name: str = "custom"

    def __call__(self, u: float) -> complex:
        return complex(self.g(u))


def cosine_profile(tau: float) -> ProfileFunction:
    return ProfileFunction(
        g=lambda u: math.cos(math.pi * u / (2 * tau)),
        name="cos",
    )


@dataclass(frozen=True)
class CyclicClockSpec:
    dimension: int
    tau: float
    centered: bool = True

    def __post_init__(self) -> None:
        if self.dimension < MIN_CYCLE_DIMENSION:
            raise ConfigurationError(
                f"cyclic clock needs D >= {MIN_CYCLE_DIMENSION}, got {self.dimension}"
            )
        if not (math.isfinite(self.tau) and self.tau > 0):
            raise ConfigurationError(f"tau must be a positive finite real, got {self.tau}")

    def wave_numbers(self) -> npt.NDArray[np.int64]:
        d = self.dimension
        if self.centered:
            return np.arange(-((d - 1) // 2), d // 2 + 1, dtype=np.int64)
        return np.arange(0, d, dtype=np.int64)

    def frequencies(self) -> npt.NDArray[np.float64]:
        return 2 * np.pi * self.wave_numbers() / (self.dimension * self.tau)
