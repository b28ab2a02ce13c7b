import argparse
from unittest.mock import Mock

from src.shell.adapters.commands import CommandContext
from src.shell.orchestrators.cli_orchestrator import CLIOrchestrator
from src.shell.registry.command_registry import CommandRegistry


def test_cli_orchestrator_registers_every_command():
    registry = CommandRegistry()

    CLIOrchestrator(argparse.ArgumentParser(), registry=registry)

    assert registry.names == ["validate", "report", "sweep", "export", "read"]


def test_cli_orchestrator_shares_context_with_commands():
    context = CommandContext(loader=Mock())
    registry = CommandRegistry()

    orchestrator = CLIOrchestrator(argparse.ArgumentParser(), context, registry)

    assert orchestrator.context is context
    assert all(registry.get(name).context is context for name in registry.names)


def test_cli_orchestrator_parses_subcommand_flags():
    parser = argparse.ArgumentParser()
    CLIOrchestrator(parser, registry=CommandRegistry())

    args = parser.parse_args(["export", "--which", "tc", "--model", "cyclic", "--D", "8"])

    assert args.command == "export"
    assert args.which == "TC"
    assert args.dimension == 8
    assert callable(args.handler)
