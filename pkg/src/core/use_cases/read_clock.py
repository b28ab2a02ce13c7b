from src.core.models.quadrature_rule import QuadratureRule
from src.core.models.reports import ClockReading
from src.core.ports.clock_model_ports import ClockModel

from ..workflows.operators import build_tc, reading


class ReadClockUseCase:
    def execute(self, model: ClockModel, quad: QuadratureRule, t: float) -> ClockReading:
        tc = build_tc(model, quad)
        return ClockReading(t=t, reading=reading(model, tc, t))
