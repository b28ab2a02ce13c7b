import argparse

from src.core.use_cases.export_operator import ExportOperatorUseCase
from src.core.use_cases.read_clock import ReadClockUseCase
from src.core.use_cases.sweep import SweepUseCase
from src.core.use_cases.theorem_report import TheoremReportUseCase
from src.core.use_cases.validate_clock import ValidateClockUseCase
from src.shell.adapters.commands import (
    CommandContext,
    ExportCommand,
    ReadCommand,
    ReportCommand,
    SweepCommand,
    ValidateCommand,
)
from src.shell.registry.command_registry import CommandRegistry, command_registry


class CLIOrchestrator:
    def __init__(
        self,
        parser: argparse.ArgumentParser,
        context: CommandContext | None = None,
        registry: CommandRegistry = command_registry,
    ):
        self.parser = parser
        self.context = context or CommandContext()
        self.registry = registry
        self._initialize_components()

    def _initialize_components(self) -> None:
        self._setup_commands()

    def _setup_commands(self) -> None:
        context = self.context
        self.registry.register_command("validate", ValidateCommand(ValidateClockUseCase(), context))
        self.registry.register_command("report", ReportCommand(TheoremReportUseCase(), context))
        self.registry.register_command("sweep", SweepCommand(SweepUseCase(), context))
        self.registry.register_command("export", ExportCommand(ExportOperatorUseCase(), context))
        self.registry.register_command("read", ReadCommand(ReadClockUseCase(), context))

        subparsers = self.parser.add_subparsers(dest="command", required=True)
        self.registry.register_all_to_parser(subparsers)
