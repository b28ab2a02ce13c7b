from argparse import ArgumentParser, Namespace
from typing import Protocol


class ClockCommandPort(Protocol):
    """A CLI command: declares its arguments and returns a process exit code"""
    help: str

    def add_arguments(self, parser: ArgumentParser) -> None:
        ...

    def execute(self, args: Namespace) -> int:
        ...
