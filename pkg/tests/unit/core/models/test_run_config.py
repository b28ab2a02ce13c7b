import pytest

from src.core.errors import ConfigurationError
from src.core.models.run_config import RunConfig, parse_run_config


def test_empty_config_uses_defaults():
    config = parse_run_config({})

    assert config.model.name == "piecewise-linear"
    assert config.model.tau == 1.0
    assert config.grid.index_range is None
    assert config.output.formats == ("json", "csv")
    assert config.seed == 7


def test_cyclic_dimension_is_read_from_alias():
    config = parse_run_config({"model": {"name": "cyclic", "D": 16}})

    assert config.model.dimension == 16


@pytest.mark.parametrize(
    "data",
    [
        {"unknown": 1},
        {"model": {"name": "cyclic", "D": 16, "colour": "red"}},
        {"model": {"name": "sundial"}},
        {"model": {"tau": -1.0}},
        {"model": {"name": "cyclic"}},
        {"model": {"name": "piecewise-linear", "D": 16}},
        {"grid": {"index_min": -3}},
        {"grid": {"index_min": 1, "index_max": 4}},
        {"model": {"name": "cyclic", "D": 4}, "grid": {"index_min": -8, "index_max": 8}},
        {"sweep": {"dimensions": [64, 32]}},
        {"output": {"formats": ["xml"]}},
    ],
)
def test_invalid_configs_raise_configuration_error(data):
    with pytest.raises(ConfigurationError):
        parse_run_config(data)


def test_overrides_merge_into_sections_and_skip_none():
    config = parse_run_config({"model": {"name": "cyclic", "D": 64, "tau": 2.0}})

    updated = config.with_overrides({
        "model": {"D": 32, "tau": None},
        "grid": {"index_min": None, "index_max": None},
        "seed": 11,
    })

    assert updated.model.dimension == 32
    assert updated.model.tau == 2.0
    assert updated.seed == 11
    assert config.model.dimension == 64


def test_switching_away_from_cyclic_drops_the_dimension():
    config = parse_run_config({"model": {"name": "cyclic", "D": 64}})

    updated = config.with_overrides({"model": {"name": "piecewise-linear"}})

    assert updated.model.name == "piecewise-linear"
    assert updated.model.dimension is None


def test_run_config_is_frozen():
    config = RunConfig()
    with pytest.raises(Exception):
        config.seed = 3
