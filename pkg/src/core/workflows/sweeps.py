import logging
from typing import Callable, Sequence

from ..models.quadrature_rule import QuadratureRule
from ..models.reports import SweepRow
from ..models.suite_options import DEFAULT_SUITE_OPTIONS, SuiteOptions
from ..ports.clock_model_ports import ClockModel
from .clock_states import click_state
from .operators import commutator_expectation
from .theorem_suite import TheoremSuite

logger = logging.getLogger(__name__)


def sweep_dimensions(
    model_for: Callable[[int], ClockModel],
    dimensions: Sequence[int],
    quad: QuadratureRule,
    options: SuiteOptions = DEFAULT_SUITE_OPTIONS,
) -> list[SweepRow]:
    """Commutator and click-shift errors of phi_C(0) for each cycle dimension"""
    rows = []
    for dimension in dimensions:
        model = model_for(dimension)
        suite = TheoremSuite(model, quad, options)
        origin = click_state(model.grid, 0)
        ops = suite.operators
        commutator = commutator_expectation(ops.tc, ops.hamiltonian, origin)
        difference, leak = suite.pc_shift(origin)
        row = SweepRow(
            dimension=dimension,
            commutator_error=abs(commutator - 1j),
            lemma2_error=abs(difference - model.grid.tau),
            seam_leak=leak if leak is not None else 0.0,
        )
        logger.info(
            "D = %d: commutator error %.6g, shift error %.6g",
            dimension, row.commutator_error, row.lemma2_error,
        )
        rows.append(row)
    return rows


def errors_decreasing(rows: Sequence[SweepRow]) -> bool:
    errors = [row.commutator_error for row in rows]
    return all(later < earlier for earlier, later in zip(errors, errors[1:]))
