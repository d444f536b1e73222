import argparse

from src.common.exceptions import InvalidParameterError
from src.common.workbench_command.command import CommandBase
from src.common.workbench_command.command_manager import CommandManager


class MainModel:
    def __init__(self):
        self._command_manager = CommandManager()

    @property
    def command_manager(self) -> CommandManager:
        return self._command_manager

    def get_command(self, args: argparse.Namespace) -> CommandBase:
        command = self._command_manager.get_command_by_name(args.command)
        if command is None:
            raise InvalidParameterError(f"unknown command {args.command!r}")
        return command
