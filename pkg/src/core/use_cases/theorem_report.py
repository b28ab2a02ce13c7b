from src.core.models.quadrature_rule import QuadratureRule
from src.core.models.reports import SuiteResult
from src.core.models.suite_options import DEFAULT_SUITE_OPTIONS, SuiteOptions
from src.core.ports.clock_model_ports import ClockModel

from ..workflows.operators import assemble_operators
from ..workflows.theorem_suite import run_suite


class TheoremReportUseCase:
    def execute(
        self,
        model: ClockModel,
        quad: QuadratureRule,
        options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
        symmetrize_hamiltonian: bool = False,
    ) -> SuiteResult:
        operators = assemble_operators(
            model,
            quad,
            symmetrize_hamiltonian=symmetrize_hamiltonian,
            step_fraction=options.tolerances.fd_step_fraction,
        )
        return run_suite(model, quad, options, operators)
