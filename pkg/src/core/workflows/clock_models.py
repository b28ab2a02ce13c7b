import logging
from dataclasses import dataclass, replace

import numpy as np
import numpy.typing as npt

from ..errors import ConfigurationError, ModelError
from ..models.clock_grid import ClockGrid, ClockIndex, TimeResolution
from ..models.clock_specs import CyclicClockSpec, ProfileFunction, cosine_profile
from ..ports.clock_model_ports import ClockModel

logger = logging.getLogger(__name__)

PROFILE_SAMPLES = 65
PROFILE_TOLERANCE = 1e-8

TWO_COMPONENT_COS = "two-component-cos"
PIECEWISE_LINEAR = "piecewise-linear"
CYCLIC = "cyclic"
MODEL_NAMES = (TWO_COMPONENT_COS, PIECEWISE_LINEAR, CYCLIC)


@dataclass(frozen=True)
class TwoComponentClock:
    """Sector clock: each window mixes the current click with one neighbour"""
    grid: ClockGrid
    profile: ProfileFunction
    name: str = TWO_COMPONENT_COS
    support_radius: int | None = 1
    # the sector switch at u = 0 leaves c^{+-1,0} with one-sided slopes for any profile
    kinked: bool = True
    exact: bool = False

    def c0(self, n: int, u: float) -> complex:
        tau = self.grid.tau
        if n == 0:
            return self.profile(u)
        if n == 1 and u >= 0:
            return self.profile(u - tau)
        if n == -1 and u < 0:
            return self.profile(u + tau)
        return 0j

    def c0_column(self, offsets: npt.NDArray[np.int64], u: float) -> npt.NDArray[np.complex128]:
        return np.array([self.c0(int(n), u) for n in offsets], dtype=np.complex128)

    def cdot0(self, n: int) -> complex | None:
        return None


@dataclass(frozen=True)
class PiecewiseLinearClock:
    """Linear interpolation between neighbouring clicks; not norm preserving"""
    grid: ClockGrid
    name: str = PIECEWISE_LINEAR
    support_radius: int | None = 1
    kinked: bool = True
    exact: bool = False

    def c0(self, n: int, u: float) -> complex:
        x = u / self.grid.tau
        if n == 0:
            return complex(1.0 - abs(x))
        if n == 1 and u >= 0:
            return complex(x)
        if n == -1 and u < 0:
            return complex(-x)
        return 0j

    def c0_column(self, offsets: npt.NDArray[np.int64], u: float) -> npt.NDArray[np.complex128]:
        return np.array([self.c0(int(n), u) for n in offsets], dtype=np.complex128)

    def cdot0(self, n: int) -> complex | None:
        return None


@dataclass(frozen=True)
class CyclicClock:
    """Exact finite clock: D equally spaced energies, evolution by tau shifts one click"""
    grid: ClockGrid
    spec: CyclicClockSpec
    name: str = CYCLIC
    support_radius: int | None = None
    kinked: bool = False
    exact: bool = True

    def c0(self, n: int, u: float) -> complex:
        return complex(self.c0_column(np.array([n], dtype=np.int64), u)[0])

    def c0_column(self, offsets: npt.NDArray[np.int64], u: float) -> npt.NDArray[np.complex128]:
        d = self.spec.dimension
        k = self.spec.wave_numbers()
        # reduce n*k mod D first so the column is exactly D-periodic in n
        residues = np.mod(np.outer(np.asarray(offsets, dtype=np.int64), k), d)
        phase = residues * (2 * np.pi / d) - self.spec.frequencies() * u
        result: npt.NDArray[np.complex128] = np.exp(1j * phase).sum(axis=1) / d
        return result

    def cdot0(self, n: int) -> complex | None:
        d = self.spec.dimension
        k = self.spec.wave_numbers()
        phase = np.mod(n * k, d) * (2 * np.pi / d)
        return complex(np.sum(-1j * self.spec.frequencies() * np.exp(1j * phase)) / d)


def make_two_component(grid: ClockGrid, profile: ProfileFunction) -> TwoComponentClock:
    _validate_profile(profile, grid.tau)
    return TwoComponentClock(grid=grid, profile=profile)


def make_piecewise_linear(grid: ClockGrid) -> PiecewiseLinearClock:
    return PiecewiseLinearClock(grid=grid)


def make_cyclic(spec: CyclicClockSpec, grid: ClockGrid) -> CyclicClock:
    if grid.size > spec.dimension:
        raise ConfigurationError(
            f"grid of {grid.size} indices is wider than the cycle D = {spec.dimension}"
        )
    if grid.tau != spec.tau:
        raise ConfigurationError(f"grid tau {grid.tau} differs from cycle tau {spec.tau}")
    if grid.size == spec.dimension and not grid.periodic:
        grid = replace(grid, cycle_length=spec.dimension)
    if not grid.periodic:
        logger.debug("cyclic clock on a partial window of %d / %d indices", grid.size, spec.dimension)
    return CyclicClock(grid=grid, spec=spec)


def make_model(
    name: str,
    tau: float,
    index_range: tuple[int, int] | None = None,
    dimension: int | None = None,
    centered: bool = True,
) -> ClockModel:
    """Build a model by its configuration name"""
    if name == CYCLIC:
        if dimension is None:
            raise ConfigurationError("the cyclic model needs a cycle dimension D")
        spec = CyclicClockSpec(dimension=dimension, tau=tau, centered=centered)
        if index_range is None:
            return make_cyclic(spec, ClockGrid.centered_cycle(tau, dimension))
        return make_cyclic(spec, _grid(tau, index_range))
    grid = _grid(tau, index_range or (-8, 8))
    if name == TWO_COMPONENT_COS:
        return make_two_component(grid, cosine_profile(tau))
    if name == PIECEWISE_LINEAR:
        return make_piecewise_linear(grid)
    raise ConfigurationError(f"unknown model '{name}', expected one of {MODEL_NAMES}")


def _grid(tau: float, index_range: tuple[int, int]) -> ClockGrid:
    low, high = index_range
    return ClockGrid(TimeResolution(tau), ClockIndex(low), ClockIndex(high))


def _validate_profile(profile: ProfileFunction, tau: float) -> None:
    checks = {
        "g(0) = 1": abs(profile(0.0) - 1.0),
        "g(+tau) = 0": abs(profile(tau)),
        "g(-tau) = 0": abs(profile(-tau)),
    }
    samples = np.linspace(0.0, tau, PROFILE_SAMPLES)
    checks["|g(-t)| = |g(t)|"] = max(
        abs(abs(profile(float(t))) - abs(profile(float(-t)))) for t in samples
    )
    checks["|g(u)|^2 + |g(u - tau)|^2 = 1"] = max(
        abs(abs(profile(float(u))) ** 2 + abs(profile(float(u) - tau)) ** 2 - 1.0)
        for u in samples
    )
    violated = {label: defect for label, defect in checks.items() if defect > PROFILE_TOLERANCE}
    if violated:
        details = ", ".join(f"{label} (defect {defect:.3g})" for label, defect in violated.items())
        raise ModelError(f"profile '{profile.name}' violates {details}")
