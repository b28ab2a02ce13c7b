import pytest

from src.core.errors import ConfigurationError
from src.core.models.quadrature_rule import QuadratureRule


def test_boundaries_are_symmetric_and_include_zero():
    rule = QuadratureRule(tau=1.0, panels=3)

    edges = rule.boundaries
    assert 0.0 in edges
    assert edges[0] == -0.5 and edges[-1] == 0.5
    assert [-x for x in edges] == list(reversed(edges))


def test_even_panel_count_does_not_duplicate_zero():
    assert QuadratureRule(tau=2.0, panels=4).boundaries == (-1.0, -0.5, 0.0, 0.5, 1.0)


def test_refined_doubles_nodes():
    rule = QuadratureRule(tau=1.0, nodes_per_panel=8)

    assert rule.refined().nodes_per_panel == 16
    assert rule.refined().panels == rule.panels


@pytest.mark.parametrize(
    "kwargs",
    [
        {"tau": 0.0},
        {"tau": 1.0, "nodes_per_panel": 1},
        {"tau": 1.0, "panels": 0},
        {"tau": 1.0, "max_refinements": -1},
    ],
)
def test_invalid_rules(kwargs):
    with pytest.raises(ConfigurationError):
        QuadratureRule(**kwargs)
