import pytest

from src.core.models.quadrature_rule import QuadratureRule
from src.core.models.run_config import parse_run_config
from src.core.models.tolerances import Tolerances
from src.core.workflows.clock_models import CyclicClock, PiecewiseLinearClock, TwoComponentClock
from src.core.workflows.run_setup import (
    build_model,
    build_quadrature,
    build_suite_options,
    build_tolerances,
)


def test_build_model_defaults_to_piecewise_on_centered_grid():
    model = build_model(parse_run_config({}))

    assert isinstance(model, PiecewiseLinearClock)
    assert (model.grid.index_min, model.grid.index_max) == (-8, 8)


def test_build_model_uses_grid_section():
    config = parse_run_config({
        "model": {"name": "two-component-cos", "tau": 0.5},
        "grid": {"index_min": -3, "index_max": 5},
    })

    model = build_model(config)

    assert isinstance(model, TwoComponentClock)
    assert model.grid.tau == 0.5
    assert (model.grid.index_min, model.grid.index_max) == (-3, 5)


def test_build_model_dimension_override_for_sweeps():
    config = parse_run_config({"model": {"name": "cyclic", "D": 16}})

    assert build_model(config).grid.size == 16
    swept = build_model(config, dimension=32)
    assert isinstance(swept, CyclicClock)
    assert swept.grid.size == 32
    assert swept.grid.periodic


def test_build_quadrature_merges_section_over_base():
    config = parse_run_config({"model": {"tau": 2.0}, "quadrature": {"panels": 8}})
    base = QuadratureRule(tau=1.0, nodes_per_panel=24, tolerance=1e-7)

    rule = build_quadrature(config, base)

    assert rule.tau == 2.0
    assert rule.panels == 8
    assert rule.nodes_per_panel == 24
    assert rule.tolerance == 1e-7


def test_build_quadrature_keeps_zero_refinements():
    config = parse_run_config({"quadrature": {"max_refinements": 0}})

    assert build_quadrature(config).max_refinements == 0


def test_build_tolerances_overrides_only_given_values():
    config = parse_run_config({"tolerances": {"uncertainty": 1e-4}})

    tolerances = build_tolerances(config, Tolerances(abs_tol=1e-9))

    assert tolerances.uncertainty == 1e-4
    assert tolerances.abs_tol == 1e-9


def test_build_suite_options_carries_seed():
    options = build_suite_options(parse_run_config({"seed": 42}))

    assert options.seed == 42
    assert options.tolerances.exact_model == pytest.approx(1e-8)
