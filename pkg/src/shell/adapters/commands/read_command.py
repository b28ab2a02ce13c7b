import json
import sys
from argparse import ArgumentParser, Namespace

from src.core.ports.command_ports import ClockCommandPort
from src.core.use_cases.read_clock import ReadClockUseCase
from src.core.workflows.run_setup import build_model

from ...utils.exit_codes import ExitCode
from ..serialization import to_jsonable
from .common import CommandContext, add_run_arguments


class ReadCommand(ClockCommandPort):
    """Prints the clock reading at one time as JSON on stdout"""
    help = "Print reading(t) and reading(t) - t"

    def __init__(self, use_case: ReadClockUseCase, context: CommandContext):
        self.use_case = use_case
        self.context = context

    def add_arguments(self, parser: ArgumentParser) -> None:
        add_run_arguments(parser)
        parser.add_argument("--t", dest="t", type=float, required=True, help="Time to read")

    def execute(self, args: Namespace) -> int:
        config = self.context.run_config(args)
        model = build_model(config)
        result = self.use_case.execute(model, self.context.quadrature(config), args.t)
        payload = {"model": model.name, "t": result.t, "reading": result.reading, "error": result.error}
        sys.stdout.write(json.dumps(to_jsonable(payload), sort_keys=True) + "\n")
        return ExitCode.OK
