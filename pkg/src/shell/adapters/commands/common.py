from argparse import ArgumentParser, Namespace
from dataclasses import dataclass, field
from typing import Any, Dict

from src.core.models.quadrature_rule import QuadratureRule
from src.core.models.run_config import RunConfig, parse_run_config
from src.core.models.tolerances import Tolerances
from src.core.ports.report_ports import ConfigLoaderPort
from src.core.workflows.clock_models import MODEL_NAMES
from src.core.workflows.run_setup import build_quadrature, build_tolerances
from src.settings import Settings

from ..config_loaders.yaml_config_loader import YAMLConfigLoader
from ..writers.file_report_sink import FileReportSink


@dataclass
class CommandContext:
    settings: Settings = field(default_factory=Settings)
    loader: ConfigLoaderPort | None = None

    def __post_init__(self) -> None:
        if self.loader is None:
            self.loader = YAMLConfigLoader(self.settings)

    def run_config(self, args: Namespace) -> RunConfig:
        assert self.loader is not None
        base = parse_run_config(self.loader.load_config(getattr(args, "config", None)))
        return base.with_overrides(cli_overrides(args))

    def tolerances(self, config: RunConfig) -> Tolerances:
        return build_tolerances(config, self.settings.tolerances())

    def quadrature(self, config: RunConfig) -> QuadratureRule:
        settings = self.settings
        base = QuadratureRule(
            tau=config.model.tau,
            nodes_per_panel=settings.quadrature_nodes,
            panels=settings.quadrature_panels,
            tolerance=settings.quadrature_tolerance,
            max_refinements=settings.quadrature_max_refinements,
        )
        return build_quadrature(config, base)

    def sink(self, config: RunConfig) -> FileReportSink:
        return FileReportSink(
            config.output.dir or self.settings.output_dir,
            formats=config.output.formats,
        )


def add_run_arguments(parser: ArgumentParser) -> None:
    """Flags shared by every command; each one overrides the config file value"""
    parser.add_argument("--config", type=str, default=None, help="Run configuration YAML file")
    parser.add_argument("--model", type=str, choices=MODEL_NAMES, default=None)
    parser.add_argument("--tau", type=float, default=None, help="Time resolution")
    parser.add_argument("--D", dest="dimension", type=int, default=None, help="Cycle dimension")
    parser.add_argument("--index-min", type=int, default=None)
    parser.add_argument("--index-max", type=int, default=None)
    parser.add_argument("--nodes", type=int, default=None, help="Gauss-Legendre nodes per panel")
    parser.add_argument("--panels", type=int, default=None)
    parser.add_argument(
        "--symmetrize",
        action="store_const",
        const=True,
        default=None,
        help="Replace H and exported operators by (A + A^dagger)/2",
    )
    parser.add_argument("--output-dir", type=str, default=None)
    parser.add_argument(
        "--format",
        dest="formats",
        choices=("json", "csv"),
        action="append",
        default=None,
        help="Output format, repeatable (default: json and csv)",
    )
    parser.add_argument("--seed", type=int, default=None)


def cli_overrides(args: Namespace) -> Dict[str, Any]:
    def flag(name: str) -> Any:
        return getattr(args, name, None)

    return {
        "model": {
            "name": flag("model"),
            "tau": flag("tau"),
            "D": flag("dimension"),
            "symmetrize": flag("symmetrize"),
        },
        "grid": {"index_min": flag("index_min"), "index_max": flag("index_max")},
        "quadrature": {"nodes_per_panel": flag("nodes"), "panels": flag("panels")},
        "output": {
            "dir": flag("output_dir"),
            "formats": tuple(flag("formats")) if flag("formats") else None,
        },
        "seed": flag("seed"),
    }


def config_payload(config: RunConfig) -> Dict[str, Any]:
    return config.model_dump(mode="json", by_alias=True)
