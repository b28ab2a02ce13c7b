from typing import Callable, Sequence

from src.core.models.quadrature_rule import QuadratureRule
from src.core.models.reports import SweepRow
from src.core.models.suite_options import DEFAULT_SUITE_OPTIONS, SuiteOptions
from src.core.ports.clock_model_ports import ClockModel

from ..workflows.sweeps import sweep_dimensions


class SweepUseCase:
    def execute(
        self,
        model_for: Callable[[int], ClockModel],
        dimensions: Sequence[int],
        quad: QuadratureRule,
        options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
    ) -> list[SweepRow]:
        return sweep_dimensions(model_for, dimensions, quad, options)
