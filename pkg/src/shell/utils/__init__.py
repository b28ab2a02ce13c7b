from .exit_codes import ExitCode, execute_with_error_handling, run_command

__all__ = ["ExitCode", "execute_with_error_handling", "run_command"]
