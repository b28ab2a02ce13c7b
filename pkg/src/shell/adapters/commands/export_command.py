from argparse import ArgumentParser, Namespace

from src.core.ports.command_ports import ClockCommandPort
from src.core.use_cases.export_operator import EXPORTABLE, ExportOperatorUseCase
from src.core.workflows.run_setup import build_model

from ...utils.exit_codes import ExitCode
from ..serialization import operator_envelope, operator_rows
from .common import CommandContext, add_run_arguments, config_payload


class ExportCommand(ClockCommandPort):
    """Writes one assembled operator as a CSV of entries plus a JSON envelope"""
    help = "Export H, PC or TC as matrix files"

    def __init__(self, use_case: ExportOperatorUseCase, context: CommandContext):
        self.use_case = use_case
        self.context = context

    def add_arguments(self, parser: ArgumentParser) -> None:
        add_run_arguments(parser)
        parser.add_argument("--which", type=str.upper, choices=sorted(EXPORTABLE), required=True)

    def execute(self, args: Namespace) -> int:
        config = self.context.run_config(args)
        tolerances = self.context.tolerances(config)
        quad = self.context.quadrature(config)
        model = build_model(config)
        operator = self.use_case.execute(
            model, quad, args.which, config.model.symmetrize, tolerances.fd_step_fraction
        )

        sink = self.context.sink(config)
        name = f"operator_{args.which}"
        sink.write_json(name, {
            "config": config_payload(config),
            "model": model.name,
            **operator_envelope(operator, quad),
        })
        sink.write_csv(name, ["row", "col", "re", "im"], operator_rows(operator))
        sink.write_run_info("export", {"which": args.which})
        return ExitCode.OK
