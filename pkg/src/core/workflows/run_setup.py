from dataclasses import replace

from ..models.quadrature_rule import QuadratureRule
from ..models.run_config import RunConfig
from ..models.suite_options import DEFAULT_SUITE_OPTIONS, SuiteOptions
from ..models.tolerances import DEFAULT_TOLERANCES, Tolerances
from ..ports.clock_model_ports import ClockModel
from .clock_models import make_model


def build_model(config: RunConfig, dimension: int | None = None) -> ClockModel:
    """Model named by the config; ``dimension`` replaces D for sweeps"""
    section = config.model
    return make_model(
        section.name,
        section.tau,
        index_range=config.grid.index_range,
        dimension=dimension if dimension is not None else section.dimension,
        centered=section.centered,
    )


def build_quadrature(config: RunConfig, base: QuadratureRule | None = None) -> QuadratureRule:
    section = config.quadrature
    rule = base if base is not None else QuadratureRule(tau=config.model.tau)
    return replace(
        rule,
        tau=config.model.tau,
        nodes_per_panel=section.nodes_per_panel or rule.nodes_per_panel,
        panels=section.panels or rule.panels,
        tolerance=section.tolerance or rule.tolerance,
        max_refinements=(
            section.max_refinements if section.max_refinements is not None
            else rule.max_refinements
        ),
    )


def build_tolerances(config: RunConfig, base: Tolerances = DEFAULT_TOLERANCES) -> Tolerances:
    return base.with_overrides(**config.tolerances.model_dump())


def build_suite_options(
    config: RunConfig,
    base: Tolerances = DEFAULT_TOLERANCES,
) -> SuiteOptions:
    return replace(
        DEFAULT_SUITE_OPTIONS,
        tolerances=build_tolerances(config, base),
        seed=config.seed,
    )
