import logging
from argparse import ArgumentParser, Namespace

from src.core.ports.clock_model_ports import ClockModel
from src.core.ports.command_ports import ClockCommandPort
from src.core.use_cases.sweep import SweepUseCase
from src.core.workflows.run_setup import build_model, build_suite_options
from src.core.workflows.sweeps import errors_decreasing

from ...utils.exit_codes import ExitCode
from .common import CommandContext, add_run_arguments, config_payload

logger = logging.getLogger(__name__)


class SweepCommand(ClockCommandPort):
    """Cyclic clocks over a list of cycle dimensions"""
    help = "Sweep the cyclic clock over D and tabulate the finite-size errors"

    def __init__(self, use_case: SweepUseCase, context: CommandContext):
        self.use_case = use_case
        self.context = context

    def add_arguments(self, parser: ArgumentParser) -> None:
        add_run_arguments(parser)
        parser.add_argument("--dimensions", type=int, nargs="+", default=None)

    def execute(self, args: Namespace) -> int:
        config = self.context.run_config(args)
        dimensions = tuple(args.dimensions) if args.dimensions else config.sweep.dimensions
        config = config.with_overrides({
            "model": {"name": "cyclic", "D": dimensions[0]},
            "sweep": {"dimensions": dimensions},
        })
        quad = self.context.quadrature(config)
        options = build_suite_options(config, self.context.settings.tolerances())

        def model_for(dimension: int) -> ClockModel:
            return build_model(config, dimension)

        rows = self.use_case.execute(model_for, config.sweep.dimensions, quad, options)
        decreasing = errors_decreasing(rows)

        sink = self.context.sink(config)
        sink.write_json("sweep", {
            "config": config_payload(config),
            "rows": rows,
            "commutator_error_decreasing": decreasing,
        })
        sink.write_csv(
            "sweep",
            ["D", "commutator_error", "lemma2_error", "seam_leak"],
            [(r.dimension, r.commutator_error, r.lemma2_error, r.seam_leak) for r in rows],
        )
        sink.write_run_info("sweep", {"dimensions": list(config.sweep.dimensions)})

        if not decreasing:
            logger.error("commutator error is not decreasing over D = %s", list(config.sweep.dimensions))
            return ExitCode.CHECK_FAILED
        return ExitCode.OK
