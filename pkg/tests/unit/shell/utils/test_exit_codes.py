import pytest

from src.core.errors import ConfigurationError, NumericsError, StateInputError
from src.shell.utils.exit_codes import ExitCode, exit_code_for, execute_with_error_handling, run_command


def test_execute_with_error_handling_success():
    assert execute_with_error_handling(lambda: "ok", lambda e: "handled") == "ok"


def test_execute_with_error_handling_calls_handler():
    def failing():
        raise ValueError("boom")

    assert execute_with_error_handling(failing, lambda e: str(e)) == "boom"


@pytest.mark.parametrize("error, code", [
    (NumericsError("nan"), ExitCode.NUMERICS_ERROR),
    (ConfigurationError("bad"), ExitCode.CONFIG_ERROR),
    (StateInputError("zero"), ExitCode.CONFIG_ERROR),
])
def test_exit_code_for_library_errors(error, code):
    assert exit_code_for(error) is code


def test_exit_code_for_reraises_foreign_errors():
    with pytest.raises(KeyError):
        exit_code_for(KeyError("x"))


def test_run_command_maps_errors(caplog):
    def failing():
        raise ConfigurationError("grid must contain 0")

    assert run_command(failing) is ExitCode.CONFIG_ERROR
    assert "grid must contain 0" in caplog.text
    assert run_command(lambda: ExitCode.CHECK_FAILED) is ExitCode.CHECK_FAILED
