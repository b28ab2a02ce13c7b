from dataclasses import dataclass

from .tolerances import DEFAULT_TOLERANCES, Tolerances


@dataclass(frozen=True)
class SuiteOptions:
    """Probe and sampling choices for the theorem checks; times in units of tau"""
    tolerances: Tolerances = DEFAULT_TOLERANCES
    t_samples: tuple[float, ...] = (-2.7, -0.5, 0.0, 0.3, 1.0, 2.7)
    quadratic_ks: tuple[float, ...] = (0.5, 1.0, 2.0)
    reading_span: float = 10.0
    reading_points: int = 13
    consistency_samples: int = 33
    seed: int = 7
    random_support: int = 2


DEFAULT_SUITE_OPTIONS = SuiteOptions()
