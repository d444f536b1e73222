import argparse
from typing import Optional

import loguru

from src.common.workbench_command.command import CommandBase
from src.core.paths import COMMAND_IMPLEMENT_DIR
from src.core.version import __version__
from src.utils.plugin_register import PluginRegister
from src.utils.singleton import singleton

# 子命令在 --help 中的显示顺序
COMMAND_ORDER: tuple[str, ...] = ("rho", "pack", "search", "lemmas")


@singleton
class CommandManager:
    def __init__(self):
        plugins: list[CommandBase] = PluginRegister.load_plugins(COMMAND_IMPLEMENT_DIR, CommandBase)
        order = {name: index for index, name in enumerate(COMMAND_ORDER)}
        self.command_list: list[CommandBase] = sorted(
            plugins, key=lambda command: (order.get(command.name, len(order)), command.name)
        )
        loguru.logger.debug(f"可用的子命令: {[command.name for command in self.command_list]}")

    def get_command_by_name(self, name: str) -> Optional[CommandBase]:
        for command in self.command_list:
            if command.name == name:
                return command
        return None

    def build_parser(self, default_log_level: str = "INFO") -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="SpectralEP",
            description="Verification and search workbench for the spectral Erdos-Posa theorem",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        parser.add_argument(
            "--log-level",
            default=default_log_level,
            choices=["DEBUG", "INFO", "WARNING", "ERROR"],
            help="level of the log lines written to stderr",
        )
        subparsers = parser.add_subparsers(dest="command", required=True)
        for command in self.command_list:
            sub = subparsers.add_parser(command.name, help=command.description, description=command.description)
            command.add_arguments(sub)
        return parser
