import pytest

from src.settings import Settings
from src.shell.adapters.commands import CommandContext


@pytest.fixture
def output_dir(tmp_path):
    return tmp_path / "out"


@pytest.fixture
def context(tmp_path, output_dir):
    """Context whose default config file does not exist, so runs start from built-in defaults"""
    settings = Settings(
        config_file_path=str(tmp_path / "no_config.yaml"),
        output_dir=str(output_dir),
        log_level="WARNING",
    )
    return CommandContext(settings=settings)
