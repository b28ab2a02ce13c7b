from dataclasses import dataclass, field
from typing import NewType

from .clock_state import ClockState
from .tolerances import Tolerances

CheckName = NewType('CheckName', str)


@dataclass(frozen=True)
class DerivativeEstimate:
    """Symmetric-difference derivative with both one-sided slopes"""
    value: complex
    left_slope: complex
    right_slope: complex
    kinked: bool = False


@dataclass(frozen=True)
class KinkRecord:
    offset: int
    left_slope: complex
    right_slope: complex


@dataclass(frozen=True)
class IdentityReport:
    """Defects of the c-function identities over sampled window offsets"""
    model_name: str
    samples: int
    exact_model: bool
    max_orthonormality_defect: float
    max_unitarity_defect: float
    max_cross_defect: float
    max_symmetry_defect: float
    tail_weighted_sum: float
    derivative_tail: float
    kinks: tuple[KinkRecord, ...] = field(default_factory=tuple)

    @property
    def kinked(self) -> bool:
        return bool(self.kinks)

    @property
    def max_defect(self) -> float:
        return max(
            self.max_orthonormality_defect,
            self.max_unitarity_defect,
            self.max_cross_defect,
            self.max_symmetry_defect,
        )

    def passed(self, tolerances: Tolerances) -> bool:
        """Every defect is a distance to zero, so only the identity tolerance applies"""
        return tolerances.close(self.max_defect, 0.0, abs_tol=tolerances.identity)


@dataclass(frozen=True)
class TheoremContext:
    """Truncation diagnostics attached to every theorem check"""
    model_name: str
    index_min: int
    index_max: int
    boundary_mass: float
    consistency_defect: float
    seam_distance: int | None = None
    seam_leak: float | None = None
    seed: int | None = None
    note: str = ""


@dataclass(frozen=True)
class TheoremReport:
    check_name: CheckName
    measured: complex
    target: complex
    abs_error: float
    tolerance: float
    context: TheoremContext
    enforced: bool = True

    @property
    def passed(self) -> bool:
        return self.abs_error <= self.tolerance

    @property
    def failed_enforced(self) -> bool:
        return self.enforced and not self.passed


@dataclass(frozen=True)
class ProbeState:
    label: str
    state: ClockState
    seed: int | None = None


SummaryValue = float | int | str | bool | None


@dataclass(frozen=True)
class SuiteResult:
    model_name: str
    reports: tuple[TheoremReport, ...]
    summary: dict[str, SummaryValue]
    reading_rows: tuple[tuple[float, float], ...]

    @property
    def enforced_failures(self) -> tuple[TheoremReport, ...]:
        return tuple(report for report in self.reports if report.failed_enforced)


@dataclass(frozen=True)
class SweepRow:
    """Finite-size errors of the click probe for one cycle dimension"""
    dimension: int
    commutator_error: float
    lemma2_error: float
    seam_leak: float


@dataclass(frozen=True)
class ClockReading:
    t: float
    reading: float

    @property
    def error(self) -> float:
        return self.reading - self.t
