from src.core.models.reports import IdentityReport
from src.core.ports.clock_model_ports import ClockModel

from ..workflows.charfn import DEFAULT_IDENTITY_SAMPLES, validate_identities


class ValidateClockUseCase:
    def execute(
        self,
        model: ClockModel,
        samples: int = DEFAULT_IDENTITY_SAMPLES,
        step_fraction: float = 1e-5,
    ) -> IdentityReport:
        return validate_identities(model, samples, step_fraction=step_fraction)
