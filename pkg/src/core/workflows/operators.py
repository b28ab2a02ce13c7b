import logging
import math

import numpy as np
import numpy.typing as npt

from ..errors import ConfigurationError, NumericsError, StateInputError
from ..models.clock_grid import ClockGrid
from ..models.clock_state import ClockState, EvolvedState
from ..models.operator_matrix import OperatorBundle, OperatorLabel, OperatorMatrix
from ..models.quadrature_rule import QuadratureRule
from ..models.tolerances import DEFAULT_TOLERANCES
from ..ports.clock_model_ports import ClockModel
from .charfn import c_dot0_estimate, click_frame, representable_offsets, transition_frame
from .clock_states import click_state
from .numerics import integrate_array

logger = logging.getLogger(__name__)

VARIANCE_SLACK = 1e-12
ROUNDOFF_FLOOR = 64 * float(np.finfo(np.float64).eps)


def build_hamiltonian(
    model: ClockModel,
    symmetrize_result: bool = False,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
    tolerance: float = DEFAULT_TOLERANCES.abs_tol,
) -> OperatorMatrix:
    """H_{mn} = i * c_dot^{m-n,0}(0)"""
    grid = model.grid
    span = grid.size - 1
    offsets = np.arange(-span, span + 1, dtype=np.int64)
    derivatives = np.array(
        [c_dot0_estimate(model, int(r), step_fraction).value for r in offsets],
        dtype=np.complex128,
    )
    positions = np.arange(grid.size)
    entries = 1j * derivatives[positions[:, None] - positions[None, :] + span]
    hamiltonian = OperatorMatrix(grid=grid, entries=entries, label=OperatorLabel.H)
    logger.debug("assembled H for '%s' on %d clicks", model.name, grid.size)
    if hamiltonian.hermitian_defect > tolerance:
        logger.warning(
            "H of '%s' has hermitian defect %.3g", model.name, hamiltonian.hermitian_defect
        )
    return symmetrize(hamiltonian) if symmetrize_result else hamiltonian


def build_pc(grid: ClockGrid) -> OperatorMatrix:
    return OperatorMatrix(
        grid=grid,
        entries=np.diag(grid.pc_eigenvalues()).astype(np.complex128),
        label=OperatorLabel.P_C,
    )


def build_tc(model: ClockModel, quad: QuadratureRule) -> OperatorMatrix:
    """Window average of P_C along the Schroedinger curve.

    C^{km} = tau^-1 sum_n int conj(c^{kn}(u)) p_n c^{mn}(u) du, stored so that
    (T phi)^m = sum_k C^{km} d^k.
    """
    grid = model.grid
    _require_matching_window(quad, grid.tau)
    eigenvalues = grid.pc_eigenvalues()

    def density(u: float) -> npt.NDArray[np.complex128]:
        frame = click_frame(model, u)
        result: npt.NDArray[np.complex128] = (frame.conj() * eigenvalues[None, :]) @ frame.T
        return result

    c_matrix, error = integrate_array(density, quad)
    c_matrix = _chop(c_matrix, ROUNDOFF_FLOOR * float(np.max(np.abs(c_matrix), initial=0.0)))
    logger.debug(
        "assembled T_C for '%s' on %d clicks, quadrature estimate %.3g",
        model.name, grid.size, error,
    )
    return OperatorMatrix(
        grid=grid,
        entries=c_matrix.T / grid.tau,
        label=OperatorLabel.T_C,
        quadrature_error=error / grid.tau,
    )


def assemble_operators(
    model: ClockModel,
    quad: QuadratureRule,
    symmetrize_hamiltonian: bool = False,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
) -> OperatorBundle:
    return OperatorBundle(
        hamiltonian=build_hamiltonian(model, symmetrize_hamiltonian, step_fraction),
        pc=build_pc(model.grid),
        tc=build_tc(model, quad),
    )


def evolve(model: ClockModel, state: ClockState, t: float) -> EvolvedState:
    """U(t) on the click basis with t = k tau + u, |u| <= tau/2"""
    grid = model.grid
    if state.grid != grid:
        raise StateInputError("state and model live on different grids")
    tau = grid.tau
    k = math.floor(t / tau + 0.5)
    u = min(max(t - k * tau, -tau / 2), tau / 2)
    d = state.coefficients

    if grid.periodic:
        evolved = click_frame(model, u, shift=k) @ d
        return EvolvedState(state=state.with_updated_coefficients(evolved))

    if model.support_radius is None:
        evolved = click_frame(model, u, shift=k) @ d
        loss = max(0.0, state.norm_squared - float(np.vdot(evolved, evolved).real))
        return EvolvedState(state=state.with_updated_coefficients(evolved), mass_loss=loss)

    reach = model.support_radius
    sources = grid.indices()
    targets = np.arange(
        grid.index_min + k - reach, grid.index_max + k + reach + 1, dtype=np.int64
    )
    extended = transition_frame(model, targets, sources, u, shift=k) @ d
    inside = (targets >= grid.index_min) & (targets <= grid.index_max)
    evolved = np.zeros(grid.size, dtype=np.complex128)
    evolved[targets[inside] - grid.index_min] = extended[inside]
    loss = float(np.sum(np.abs(extended[~inside]) ** 2))
    return EvolvedState(state=state.with_updated_coefficients(evolved), mass_loss=loss)


def apply(op: OperatorMatrix, state: ClockState) -> ClockState:
    _require_operator_grid(op, state)
    return state.with_updated_coefficients(op.entries @ state.coefficients)


def expectation(op: OperatorMatrix, state: ClockState) -> complex:
    _require_operator_grid(op, state)
    norm_squared = _nonzero_norm_squared(state)
    d = state.coefficients
    return complex(np.vdot(d, op.entries @ d)) / norm_squared


def expectation_tc_dwell(model: ClockModel, state: ClockState, quad: QuadratureRule) -> float:
    """tau^-1 sum_n p_n int |d^n(u)|^2 du along the evolved state"""
    grid = model.grid
    _require_matching_window(quad, grid.tau)
    norm_squared = _nonzero_norm_squared(state)
    eigenvalues = grid.pc_eigenvalues()

    def dwell(u: float) -> npt.NDArray[np.complex128]:
        coefficients = evolve(model, state, u).state.coefficients
        return np.array([np.sum(eigenvalues * np.abs(coefficients) ** 2)], dtype=np.complex128)

    value, _ = integrate_array(dwell, quad)
    return float(value[0].real) / (grid.tau * norm_squared)


def variance(
    op: OperatorMatrix,
    state: ClockState,
    tolerance: float = DEFAULT_TOLERANCES.abs_tol,
) -> float:
    """<A phi|A phi> - <A>^2, from the symmetrized matrix when A is not Hermitian"""
    if op.hermitian_defect > tolerance:
        logger.warning(
            "variance of %s taken from the symmetrized form (hermitian defect %.3g)",
            op.label.value, op.hermitian_defect,
        )
        op = symmetrize(op)
    _require_operator_grid(op, state)
    norm_squared = _nonzero_norm_squared(state)
    d = state.coefficients
    applied = op.entries @ d
    mean = float(np.vdot(d, applied).real) / norm_squared
    second = float(np.vdot(applied, applied).real) / norm_squared
    value = second - mean * mean
    if value < 0:
        if value < -VARIANCE_SLACK * max(1.0, second):
            raise NumericsError(f"negative variance {value:.3g} for {op.label.value}")
        return 0.0
    return value


def commutator_expectation(tc: OperatorMatrix, h: OperatorMatrix, state: ClockState) -> complex:
    """<phi|T_C H - H T_C|phi> / <phi|phi>"""
    _require_operator_grid(tc, state)
    _require_operator_grid(h, state)
    norm_squared = _nonzero_norm_squared(state)
    d = state.coefficients
    commuted = tc.entries @ (h.entries @ d) - h.entries @ (tc.entries @ d)
    return complex(np.vdot(d, commuted)) / norm_squared


def reading(model: ClockModel, tc: OperatorMatrix, t: float) -> float:
    """Clock reading <phi_C(t)|T_C|phi_C(t)>"""
    origin = click_state(model.grid, 0)
    evolved = evolve(model, origin, t).state
    if evolved.norm_squared == 0.0:
        raise StateInputError(
            f"t = {t} carries the origin click off the grid "
            f"[{model.grid.index_min}, {model.grid.index_max}]"
        )
    return expectation(tc, evolved).real


def reading_span(model: ClockModel, span: float) -> float:
    """Largest |t| <= span at which the evolved origin click still lies on the grid"""
    grid = model.grid
    if grid.periodic or model.support_radius is None:
        return span
    reach = min(-grid.index_min, grid.index_max) - model.support_radius
    limit = max(0, reach) * grid.tau
    if span > limit:
        logger.info(
            "reading span %.6g of '%s' clamped to %.6g by the grid edge",
            span, model.name, limit,
        )
        return limit
    return span


def reading_table(
    model: ClockModel,
    tc: OperatorMatrix,
    span: float,
    points: int,
) -> list[tuple[float, float]]:
    times = np.linspace(-span, span, points)
    return [(float(t), reading(model, tc, float(t))) for t in times]


def seam_leak_rate(model: ClockModel, state: ClockState, s: float) -> float:
    """sum_n |d^n(s)|^2 (p(succ n) - p(n) - tau) / <phi|phi>; zero off the seam"""
    grid = model.grid
    if not grid.periodic:
        return 0.0
    eigenvalues = grid.pc_eigenvalues()
    jumps = np.roll(eigenvalues, -1) - eigenvalues - grid.tau
    seam = np.flatnonzero(jumps != 0.0)
    if seam.size == 0:
        return 0.0
    norm_squared = _nonzero_norm_squared(state)
    coefficients = evolve(model, state, s).state.coefficients
    return float(np.sum(np.abs(coefficients[seam]) ** 2 * jumps[seam])) / norm_squared


def symmetrize(op: OperatorMatrix) -> OperatorMatrix:
    return op.with_updated_entries((op.entries + op.entries.conj().T) / 2, symmetrized=True)


def pc_norm_bound(state: ClockState) -> tuple[float, float]:
    """(||P_C phi||, tau * sum |n| |d^n|); the first never exceeds the second"""
    grid = state.grid
    applied = grid.pc_eigenvalues() * state.coefficients
    return float(np.linalg.norm(applied)), grid.tau * state.weighted_seminorm


def hamiltonian_norm_bound(
    model: ClockModel,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
) -> float:
    """(sum_r |c_dot^{r0}(0)|)^2 over the offsets representable on the grid"""
    total = sum(
        abs(c_dot0_estimate(model, int(r), step_fraction).value)
        for r in representable_offsets(model)
    )
    return total * total


def tc_row_sums(tc: OperatorMatrix) -> npt.NDArray[np.float64]:
    """sum_m |C^{km}| for every row k"""
    # entries[m, k] = C^{km}
    sums: npt.NDArray[np.float64] = np.sum(np.abs(tc.entries), axis=0)
    return sums


def tc_row_growth(tc: OperatorMatrix) -> tuple[float, float]:
    """Least-squares (a, b) of the row sums against a + b |k|"""
    ks = np.abs(tc.grid.indices()).astype(np.float64)
    sums = tc_row_sums(tc)
    if np.unique(ks).size < 2:
        return float(sums.mean()), 0.0
    slope, intercept = np.polyfit(ks, sums, 1)
    return float(intercept), float(slope)


def pc_commutator_on_clicks(pc: OperatorMatrix, h: OperatorMatrix) -> float:
    """max_n |<phi_C(tau^n)|[P_C, H]|phi_C(tau^n)>|"""
    commutator = pc.entries @ h.entries - h.entries @ pc.entries
    return float(np.max(np.abs(np.diag(commutator))))


def _chop(values: npt.NDArray[np.complex128], floor: float) -> npt.NDArray[np.complex128]:
    """Real and imaginary parts at or below the round-off floor become exact zeros"""
    real = np.where(np.abs(values.real) <= floor, 0.0, values.real)
    imag = np.where(np.abs(values.imag) <= floor, 0.0, values.imag)
    chopped: npt.NDArray[np.complex128] = real + 1j * imag
    return chopped


def _require_matching_window(quad: QuadratureRule, tau: float) -> None:
    if quad.tau != tau:
        raise ConfigurationError(
            f"quadrature window tau {quad.tau} differs from clock tau {tau}"
        )


def _require_operator_grid(op: OperatorMatrix, state: ClockState) -> None:
    if op.grid != state.grid:
        raise StateInputError(f"{op.label.value} and state live on different grids")


def _nonzero_norm_squared(state: ClockState) -> float:
    norm_squared = state.norm_squared
    if norm_squared == 0.0:
        raise StateInputError("expectation values need a non-zero state")
    return norm_squared
