import math

import numpy as np
import pytest

from src.core.errors import IndexRangeError, WindowError
from src.core.models.clock_grid import ClockGrid
from src.core.models.clock_specs import CyclicClockSpec, cosine_profile
from src.core.models.tolerances import Tolerances
from src.core.workflows.charfn import (
    c,
    c_dot0,
    c_dot0_estimate,
    c_table,
    click_frame,
    representable_offsets,
    transition_frame,
    validate_identities,
)
from src.core.workflows.clock_models import make_cyclic, make_piecewise_linear, make_two_component


@pytest.fixture
def piecewise():
    return make_piecewise_linear(ClockGrid.centered(1.0, 8))


@pytest.fixture
def cosine():
    return make_two_component(ClockGrid.centered(1.0, 8), cosine_profile(1.0))


@pytest.fixture
def cyclic():
    return make_cyclic(CyclicClockSpec(dimension=16, tau=1.0), ClockGrid.centered_cycle(1.0, 16))


def test_c_uses_shift_identity(piecewise):
    assert c(piecewise, 3, 2, 0.25) == piecewise.c0(1, 0.25)
    assert c(piecewise, 0, 0, 0.0) == 1.0


def test_c_rejects_offsets_outside_window(piecewise):
    with pytest.raises(WindowError):
        c(piecewise, 0, 0, 0.75)


def test_c_rejects_indices_outside_grid(piecewise):
    with pytest.raises(IndexRangeError):
        c(piecewise, 9, 0, 0.0)


def test_c_dot0_piecewise_linear_symmetric_average(piecewise):
    assert c_dot0(piecewise, 1) == pytest.approx(0.5, abs=1e-9)
    assert c_dot0(piecewise, -1) == pytest.approx(-0.5, abs=1e-9)
    assert c_dot0(piecewise, 0) == pytest.approx(0.0, abs=1e-9)
    assert c_dot0(piecewise, 4) == 0.0


def test_c_dot0_piecewise_linear_is_kinked(piecewise):
    estimate = c_dot0_estimate(piecewise, 1)

    assert estimate.kinked
    assert estimate.right_slope == pytest.approx(1.0, abs=1e-9)
    assert estimate.left_slope == pytest.approx(0.0, abs=1e-9)


def test_c_dot0_cosine_two_component(cosine):
    assert c_dot0(cosine, 1) == pytest.approx(math.pi / 4, abs=1e-8)
    assert c_dot0(cosine, -1) == pytest.approx(-math.pi / 4, abs=1e-8)


def test_c_dot0_cyclic_is_analytic(cyclic):
    estimate = c_dot0_estimate(cyclic, 0)
    omegas = cyclic.spec.frequencies()

    assert estimate.value == pytest.approx(-1j * omegas.mean(), abs=1e-14)
    assert not estimate.kinked


def test_representable_offsets(piecewise, cyclic):
    assert representable_offsets(piecewise).tolist() == list(range(-16, 17))
    assert representable_offsets(cyclic).tolist() == list(range(-8, 8))


def test_click_frame_is_identity_at_zero(cyclic):
    frame = click_frame(cyclic, 0.0)

    assert np.allclose(frame, np.eye(16), atol=1e-14)


def test_click_frame_shift_moves_clicks(piecewise):
    frame = click_frame(piecewise, 0.0, shift=1)

    # column n carries c^{m-n-1, 0}(0): click n lands on n + 1
    assert frame[piecewise.grid.position(1), piecewise.grid.position(0)] == 1.0
    assert frame[piecewise.grid.position(0), piecewise.grid.position(0)] == 0.0


def test_transition_frame_supports_extended_targets(piecewise):
    sources = piecewise.grid.indices()
    targets = np.arange(-9, 10)

    frame = transition_frame(piecewise, targets, sources, 0.25)

    assert frame.shape == (19, 17)
    assert frame[-1, -1] == piecewise.c0(1, 0.25)


def test_cyclic_identities_are_exact(cyclic):
    report = validate_identities(cyclic)

    assert report.exact_model
    assert report.max_orthonormality_defect <= 1e-12
    assert report.max_unitarity_defect <= 1e-12
    assert report.max_cross_defect <= 1e-12
    assert report.max_symmetry_defect <= 1e-12
    assert report.passed(Tolerances(identity=1e-12))
    assert not report.kinked


def test_piecewise_linear_unitarity_defect_is_one_half(piecewise):
    report = validate_identities(piecewise)

    assert report.max_unitarity_defect == pytest.approx(0.5, abs=1e-12)
    assert report.max_orthonormality_defect == 0.0
    assert report.max_symmetry_defect == 0.0
    assert report.kinked
    assert {k.offset for k in report.kinks} == {-1, 0, 1}


def test_cosine_norm_sums_are_exact_but_cross_terms_are_not(cosine):
    report = validate_identities(cosine)

    assert report.max_unitarity_defect <= 1e-12
    assert report.max_cross_defect == pytest.approx(0.5, abs=1e-12)
    assert not report.passed(Tolerances(identity=1e-12))


def test_validate_identities_needs_three_samples(cyclic):
    with pytest.raises(WindowError):
        validate_identities(cyclic, samples=2)


def test_c_table_rows(piecewise):
    rows = c_table(piecewise, samples=3)

    assert len(rows) == 3 * piecewise.grid.size
    assert (0, 0.0, 1.0) in [(n, u, value) for n, u, value in rows]
