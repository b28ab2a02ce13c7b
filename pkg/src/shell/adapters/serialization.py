import math
from dataclasses import fields, is_dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence

import numpy as np

from src.core.errors import StateInputError
from src.core.models.clock_grid import ClockGrid
from src.core.models.clock_state import ClockState
from src.core.models.operator_matrix import OperatorLabel, OperatorMatrix
from src.core.models.quadrature_rule import QuadratureRule
from src.core.workflows.clock_states import state_from_entries, state_to_entries

FLOAT_FORMAT = "%.17g"


def format_float(value: float) -> str:
    return FLOAT_FORMAT % value


def to_jsonable(value: Any) -> Any:
    """Plain JSON structure: complex as {"re", "im"}, non-finite floats as strings"""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return to_jsonable(value.value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        return number if math.isfinite(number) else format_float(number)
    if isinstance(value, (complex, np.complexfloating)):
        number = complex(value)
        return {"re": to_jsonable(number.real), "im": to_jsonable(number.imag)}
    if isinstance(value, ClockState):
        return state_to_json(value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def state_to_json(state: ClockState) -> List[List[float]]:
    return [[index, re, im] for index, re, im in state_to_entries(state)]


def state_from_json(grid: ClockGrid, payload: Sequence[Sequence[float]]) -> ClockState:
    for item in payload:
        if len(item) and float(item[0]) != int(item[0]):
            raise StateInputError(f"state index must be an integer, got {item[0]!r}")
    return state_from_entries(grid, payload)


def grid_payload(grid: ClockGrid) -> Dict[str, Any]:
    return {
        "tau": grid.tau,
        "index_min": int(grid.index_min),
        "index_max": int(grid.index_max),
        "cycle_length": grid.cycle_length,
    }


def quadrature_payload(rule: QuadratureRule) -> Dict[str, Any]:
    return {
        "nodes_per_panel": rule.nodes_per_panel,
        "panels": rule.panels,
        "tolerance": rule.tolerance,
        "max_refinements": rule.max_refinements,
        "boundaries": list(rule.boundaries),
    }


def operator_envelope(op: OperatorMatrix, rule: QuadratureRule) -> Dict[str, Any]:
    return {
        "label": op.label.value,
        "grid": grid_payload(op.grid),
        "quadrature": quadrature_payload(rule),
        "hermitian_defect": op.hermitian_defect,
        "quadrature_error": op.quadrature_error,
        "symmetrized": op.symmetrized,
    }


def operator_rows(op: OperatorMatrix) -> List[tuple[int, int, float, float]]:
    """Non-zero entries as (row index, column index, re, im); P_C lists its whole diagonal"""
    indices = op.grid.indices()
    support = op.entries != 0
    if op.label is OperatorLabel.P_C:
        np.fill_diagonal(support, True)
    rows, cols = np.nonzero(support)
    return [
        (int(indices[m]), int(indices[n]), float(op.entries[m, n].real), float(op.entries[m, n].imag))
        for m, n in zip(rows, cols)
    ]
