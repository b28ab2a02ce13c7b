from src.core.errors import ConfigurationError
from src.core.models.operator_matrix import OperatorLabel, OperatorMatrix
from src.core.models.quadrature_rule import QuadratureRule
from src.core.ports.clock_model_ports import ClockModel

from ..workflows.operators import build_hamiltonian, build_pc, build_tc, symmetrize

EXPORTABLE = {"H": OperatorLabel.H, "PC": OperatorLabel.P_C, "TC": OperatorLabel.T_C}


class ExportOperatorUseCase:
    def execute(
        self,
        model: ClockModel,
        quad: QuadratureRule,
        which: str,
        symmetrize_result: bool = False,
        step_fraction: float = 1e-5,
    ) -> OperatorMatrix:
        label = EXPORTABLE.get(which.upper())
        if label is None:
            raise ConfigurationError(f"cannot export '{which}', expected one of {sorted(EXPORTABLE)}")
        if label is OperatorLabel.H:
            return build_hamiltonian(model, symmetrize_result, step_fraction)
        if label is OperatorLabel.P_C:
            return build_pc(model.grid)
        tc = build_tc(model, quad)
        return symmetrize(tc) if symmetrize_result else tc
