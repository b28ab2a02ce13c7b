import argparse
import sys
from typing import Sequence

from src.settings import Settings
from src.shell.adapters.commands import CommandContext
from src.shell.orchestrators.cli_orchestrator import CLIOrchestrator
from src.shell.registry.command_registry import CommandRegistry
from src.shell.utils.exit_codes import ExitCode, run_command
from src.shell.utils.logging_config import configure_logging


def create_parser(context: CommandContext | None = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clocklab",
        description="Time operator laboratory for ideal quantum clocks",
    )
    CLIOrchestrator(parser, context, registry=CommandRegistry())
    return parser


def main(argv: Sequence[str] | None = None, context: CommandContext | None = None) -> int:
    settings = context.settings if context is not None else Settings()
    configure_logging(settings.log_level)
    context = context or CommandContext(settings=settings)
    args = create_parser(context).parse_args(argv)
    return int(run_command(lambda: ExitCode(args.handler(args))))


if __name__ == "__main__":
    sys.exit(main())
