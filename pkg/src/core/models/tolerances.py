from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Central tolerance configuration shared by every check"""
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    exact_model: float = 1e-8
    identity: float = 1e-12
    uncertainty: float = 1e-6
    fd_step_fraction: float = 1e-5

    def allowance(self, target: complex, abs_tol: float | None = None) -> float:
        """Absolute part (abs_tol unless overridden) plus rel_tol * |target|"""
        return (self.abs_tol if abs_tol is None else abs_tol) + self.rel_tol * abs(target)

    def close(self, measured: complex, target: complex, abs_tol: float | None = None) -> bool:
        return abs(measured - target) <= self.allowance(target, abs_tol)

    def with_overrides(self, **overrides: float | None) -> "Tolerances":
        """Create a new instance, ignoring overrides that are None"""
        changes = {name: value for name, value in overrides.items() if value is not None}
        return replace(self, **changes)


DEFAULT_TOLERANCES = Tolerances()
