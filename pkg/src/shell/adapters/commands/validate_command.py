import logging
from argparse import ArgumentParser, Namespace

from src.core.ports.command_ports import ClockCommandPort
from src.core.use_cases.validate_clock import ValidateClockUseCase
from src.core.workflows.charfn import DEFAULT_IDENTITY_SAMPLES, c_table
from src.core.workflows.run_setup import build_model

from ...utils.exit_codes import ExitCode
from .common import CommandContext, add_run_arguments, config_payload

logger = logging.getLogger(__name__)


class ValidateCommand(ClockCommandPort):
    """Checks the c-function identities of the configured clock model"""
    help = "Validate the c-function identities of a clock model"

    def __init__(self, use_case: ValidateClockUseCase, context: CommandContext):
        self.use_case = use_case
        self.context = context

    def add_arguments(self, parser: ArgumentParser) -> None:
        add_run_arguments(parser)
        parser.add_argument("--samples", type=int, default=DEFAULT_IDENTITY_SAMPLES)

    def execute(self, args: Namespace) -> int:
        config = self.context.run_config(args)
        tolerances = self.context.tolerances(config)
        model = build_model(config)
        report = self.use_case.execute(model, args.samples, tolerances.fd_step_fraction)
        passed = report.passed(tolerances)

        sink = self.context.sink(config)
        sink.write_json("identity_report", {
            "config": config_payload(config),
            "report": report,
            "tolerance": tolerances.identity,
            "passed": passed,
        })
        table = c_table(model, args.samples)
        sink.write_csv(
            "c_table",
            ["n", "u", "re", "im"],
            [(n, u, value.real, value.imag) for n, u, value in table],
        )
        sink.write_csv("c_heat_table", ["n", "u", "abs"], [(n, u, abs(value)) for n, u, value in table])
        sink.write_run_info("validate", {"seed": config.seed})

        if model.exact and not passed:
            logger.error(
                "exact model '%s' has identity defect %.3g above %.3g",
                model.name, report.max_defect, tolerances.identity,
            )
            return ExitCode.CHECK_FAILED
        if not passed:
            logger.info("approximate model '%s': max identity defect %.3g", model.name, report.max_defect)
        return ExitCode.OK
