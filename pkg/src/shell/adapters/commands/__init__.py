from .common import CommandContext
from .export_command import ExportCommand
from .read_command import ReadCommand
from .report_command import ReportCommand
from .sweep_command import SweepCommand
from .validate_command import ValidateCommand

__all__ = [
    "CommandContext",
    "ExportCommand",
    "ReadCommand",
    "ReportCommand",
    "SweepCommand",
    "ValidateCommand",
]
