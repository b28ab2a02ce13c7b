import logging
from argparse import ArgumentParser, Namespace

from src.core.models.reports import TheoremReport
from src.core.ports.command_ports import ClockCommandPort
from src.core.use_cases.theorem_report import TheoremReportUseCase
from src.core.workflows.charfn import c_table
from src.core.workflows.run_setup import build_model, build_suite_options

from ...utils.exit_codes import ExitCode
from ..serialization import to_jsonable
from .common import CommandContext, add_run_arguments, config_payload

logger = logging.getLogger(__name__)


class ReportCommand(ClockCommandPort):
    """Runs the lemma and theorem checks and emits plot-ready tables"""
    help = "Run the theorem suite and write reports and tables"

    def __init__(self, use_case: TheoremReportUseCase, context: CommandContext):
        self.use_case = use_case
        self.context = context

    def add_arguments(self, parser: ArgumentParser) -> None:
        add_run_arguments(parser)

    def execute(self, args: Namespace) -> int:
        config = self.context.run_config(args)
        model = build_model(config)
        quad = self.context.quadrature(config)
        options = build_suite_options(config, self.context.settings.tolerances())
        result = self.use_case.execute(model, quad, options, config.model.symmetrize)

        sink = self.context.sink(config)
        sink.write_json("theorem_report", {
            "config": config_payload(config),
            "model": result.model_name,
            "summary": result.summary,
            "reports": [_report_payload(report) for report in result.reports],
            "enforced_failures": [report.check_name for report in result.enforced_failures],
        })
        sink.write_csv(
            "reading_table",
            ["t", "reading", "error"],
            [(t, value, value - t) for t, value in result.reading_rows],
        )
        sink.write_csv(
            "c_heat_table",
            ["n", "u", "abs"],
            [(n, u, abs(value)) for n, u, value in c_table(model)],
        )
        sink.write_run_info("report", {"seed": config.seed})

        if result.enforced_failures:
            for report in result.enforced_failures:
                logger.error(
                    "%s: measured %s, target %s, error %.3g above %.3g",
                    report.check_name, report.measured, report.target,
                    report.abs_error, report.tolerance,
                )
            return ExitCode.CHECK_FAILED
        return ExitCode.OK


def _report_payload(report: TheoremReport) -> dict[str, object]:
    payload = to_jsonable(report)
    payload["passed"] = report.passed
    return payload  # type: ignore[no-any-return]
