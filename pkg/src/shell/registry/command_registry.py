import argparse
from typing import Dict

from src.core.ports.command_ports import ClockCommandPort


class CommandRegistry:
    def __init__(self) -> None:
        self._commands: Dict[str, ClockCommandPort] = {}

    def register_command(self, name: str, command: ClockCommandPort) -> None:
        self._commands[name] = command

    @property
    def names(self) -> list[str]:
        return list(self._commands)

    def get(self, name: str) -> ClockCommandPort:
        return self._commands[name]

    def register_all_to_parser(self, subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
        for name, command in self._commands.items():
            description = getattr(command, '__doc__', None) or command.help
            parser = subparsers.add_parser(name, help=command.help, description=description)
            command.add_arguments(parser)
            parser.set_defaults(handler=command.execute)


command_registry = CommandRegistry()
