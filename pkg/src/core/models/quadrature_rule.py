import math
from dataclasses import dataclass, replace

import numpy as np

from ..errors import ConfigurationError


@dataclass(frozen=True)
class QuadratureRule:
    """Composite Gauss-Legendre rule over the window [-tau/2, +tau/2].

    Panel boundaries are derived from ``panels`` and always include 0. The
    error estimate of a rule is the difference to the same rule with doubled
    nodes per panel.
    """
    tau: float
    nodes_per_panel: int = 16
    panels: int = 4
    tolerance: float = 1e-9
    max_refinements: int = 3

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau > 0):
            raise ConfigurationError(f"tau must be a positive finite real, got {self.tau}")
        if self.nodes_per_panel < 2:
            raise ConfigurationError("nodes_per_panel must be at least 2")
        if self.panels < 1:
            raise ConfigurationError("panels must be at least 1")
        if self.max_refinements < 0:
            raise ConfigurationError("max_refinements must be non-negative")

    @property
    def window(self) -> tuple[float, float]:
        return (-self.tau / 2, self.tau / 2)

    @property
    def boundaries(self) -> tuple[float, ...]:
        edges = np.linspace(-self.tau / 2, self.tau / 2, self.panels + 1)
        edges = (edges - edges[::-1]) / 2
        return tuple(float(x) for x in np.unique(np.append(edges, 0.0)))

    def refined(self) -> "QuadratureRule":
        return replace(self, nodes_per_panel=2 * self.nodes_per_panel)


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
