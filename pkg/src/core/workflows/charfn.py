import logging
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..errors import WindowError
from ..models.reports import DerivativeEstimate, IdentityReport, KinkRecord
from ..models.tolerances import DEFAULT_TOLERANCES
from ..ports.clock_model_ports import ClockModel
from .numerics import WINDOW_SLACK_FRACTION, central_diff, tail_estimate, window_samples

logger = logging.getLogger(__name__)

DEFAULT_IDENTITY_SAMPLES = 33
DEFAULT_INDEX_PROBES = (-1, 0, 1)

ComplexMatrix = npt.NDArray[np.complex128]


def c(model: ClockModel, m: int, n: int, u: float) -> complex:
    """c^{mn}(u) through the shift identity c^{mn}(u) = c^{m-n,0}(u)"""
    grid = model.grid
    _require_in_window(u, grid.tau)
    grid.position(m)
    grid.position(n)
    return model.c0(m - n, u)


def c_dot0_estimate(
    model: ClockModel,
    n: int,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
) -> DerivativeEstimate:
    analytic = model.cdot0(n)
    if analytic is not None:
        return DerivativeEstimate(value=analytic, left_slope=analytic, right_slope=analytic)
    if model.support_radius is not None and abs(n) > model.support_radius:
        return DerivativeEstimate(value=0j, left_slope=0j, right_slope=0j)
    tau = model.grid.tau
    return central_diff(
        lambda u: model.c0(n, u),
        0.0,
        h=tau * step_fraction,
        window=(-tau / 2, tau / 2),
    )


def c_dot0(
    model: ClockModel,
    n: int,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
) -> complex:
    return c_dot0_estimate(model, n, step_fraction).value


def representable_offsets(model: ClockModel) -> npt.NDArray[np.int64]:
    """Offsets m - n reachable on the grid; one full residue set on periodic grids"""
    grid = model.grid
    if grid.periodic:
        return grid.indices()
    span = grid.size - 1
    return np.arange(-span, span + 1, dtype=np.int64)


def c_dot0_table(
    model: ClockModel,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
) -> dict[int, DerivativeEstimate]:
    return {
        int(r): c_dot0_estimate(model, int(r), step_fraction)
        for r in representable_offsets(model)
    }


def click_frame(model: ClockModel, u: float, shift: int = 0) -> ComplexMatrix:
    """Matrix W[m, n] = c^{m-n-shift,0}(u) over the grid"""
    indices = model.grid.indices()
    return transition_frame(model, indices, indices, u, shift)


def transition_frame(
    model: ClockModel,
    targets: npt.NDArray[np.int64],
    sources: npt.NDArray[np.int64],
    u: float,
    shift: int = 0,
) -> ComplexMatrix:
    """Matrix W[i, j] = c^{targets[i] - sources[j] - shift,0}(u) for contiguous index runs"""
    low = int(targets[0] - sources[-1]) - shift
    high = int(targets[-1] - sources[0]) - shift
    column = model.c0_column(np.arange(low, high + 1, dtype=np.int64), u)
    table_index = (targets[:, None] - sources[None, :]) - shift - low
    frame: ComplexMatrix = column[table_index]
    return frame


def validate_identities(
    model: ClockModel,
    samples: int = DEFAULT_IDENTITY_SAMPLES,
    index_probes: Sequence[int] = DEFAULT_INDEX_PROBES,
    step_fraction: float = DEFAULT_TOLERANCES.fd_step_fraction,
) -> IdentityReport:
    if samples < 3:
        raise WindowError(f"identity validation needs at least 3 samples, got {samples}")
    grid = model.grid
    u_samples = window_samples(grid.tau, samples)
    offsets = representable_offsets(model)
    probes = [k for k in index_probes if grid.contains(k)]

    at_zero = model.c0_column(offsets, 0.0)
    orthonormality = float(np.max(np.abs(at_zero - (offsets == 0))))

    unitarity = 0.0
    cross = 0.0
    symmetry = 0.0
    probe_positions = [grid.position(k) for k in probes]
    for u in u_samples:
        frame = click_frame(model, float(u))
        norm_defect, cross_defect = _unitarity_defects(frame, probe_positions)
        unitarity = max(unitarity, norm_defect)
        cross = max(cross, cross_defect)
        forward = model.c0_column(offsets, float(u))
        backward = model.c0_column(-offsets, -float(u))
        symmetry = max(symmetry, float(np.max(np.abs(backward - forward.conj()))))

    derivatives = c_dot0_table(model, step_fraction)
    kinks = tuple(
        KinkRecord(offset=r, left_slope=d.left_slope, right_slope=d.right_slope)
        for r, d in sorted(derivatives.items())
        if d.kinked
    )
    if kinks:
        logger.warning(
            "model '%s' has one-sided derivatives at u = 0 for offsets %s",
            model.name, [k.offset for k in kinks],
        )

    return IdentityReport(
        model_name=model.name,
        samples=samples,
        exact_model=model.exact,
        max_orthonormality_defect=orthonormality,
        max_unitarity_defect=unitarity,
        max_cross_defect=cross,
        max_symmetry_defect=symmetry,
        tail_weighted_sum=tail_estimate(model, u_samples),
        derivative_tail=_derivative_tail(model, derivatives),
        kinks=kinks,
    )


def c_table(model: ClockModel, samples: int = DEFAULT_IDENTITY_SAMPLES) -> list[tuple[int, float, complex]]:
    """Rows (n, u, c^{n0}(u)) for every grid index and window sample"""
    grid = model.grid
    rows = []
    for u in window_samples(grid.tau, samples):
        column = model.c0_column(grid.indices(), float(u))
        rows.extend((int(n), float(u), complex(value)) for n, value in zip(grid.indices(), column))
    return rows


def _unitarity_defects(frame: ComplexMatrix, probe_positions: list[int]) -> tuple[float, float]:
    """Norm defect (diagonal) and cross defect (off-diagonal) of the probe Gram matrices"""
    if not probe_positions:
        return 0.0, 0.0
    # columns: sum_n conj(c^{nk}) c^{nm}; rows: sum_n conj(c^{kn}) c^{mn}
    column_gram = frame[:, probe_positions].conj().T @ frame[:, probe_positions]
    row_gram = frame[probe_positions, :].conj() @ frame[probe_positions, :].T
    identity = np.eye(len(probe_positions))
    defects = np.maximum(np.abs(column_gram - identity), np.abs(row_gram - identity))
    diagonal = float(np.max(np.diag(defects)))
    off_diagonal = defects - np.diag(np.diag(defects))
    return diagonal, float(np.max(off_diagonal))


def _derivative_tail(model: ClockModel, derivatives: dict[int, DerivativeEstimate]) -> float:
    grid = model.grid
    mask = grid.boundary_mask()
    edge = grid.indices()[mask]
    return float(sum(abs(int(n)) * abs(derivatives[int(n)].value) for n in edge if int(n) in derivatives))


def _require_in_window(u: float, tau: float) -> None:
    half = tau / 2
    if abs(u) > half + WINDOW_SLACK_FRACTION * tau:
        raise WindowError(f"u = {u} outside the window [-{half}, +{half}]")
