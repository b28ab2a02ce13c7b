import logging
from enum import IntEnum
from typing import Callable, TypeVar

from src.core.errors import ClockLabError, NumericsError

logger = logging.getLogger(__name__)

T = TypeVar('T')


class ExitCode(IntEnum):
    OK = 0
    CHECK_FAILED = 1
    CONFIG_ERROR = 2
    NUMERICS_ERROR = 3


def execute_with_error_handling(
    fn: Callable[[], T],
    error_handler: Callable[[Exception], T]
) -> T:
    """Execute function with error handling"""
    try:
        return fn()
    except Exception as e:
        return error_handler(e)


def exit_code_for(error: Exception) -> ExitCode:
    if isinstance(error, NumericsError):
        return ExitCode.NUMERICS_ERROR
    if isinstance(error, ClockLabError):
        return ExitCode.CONFIG_ERROR
    raise error


def run_command(fn: Callable[[], ExitCode]) -> ExitCode:
    """Run a command, mapping library errors to exit codes; anything else propagates"""
    def handle(error: Exception) -> ExitCode:
        code = exit_code_for(error)
        logger.error("%s: %s", type(error).__name__, error)
        return code

    return execute_with_error_handling(fn, handle)
