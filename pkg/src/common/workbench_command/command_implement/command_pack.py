import argparse

from src.common.workbench_command.command import CommandBase
from src.model.pack_model import PackModel


class CommandPack(CommandBase):
    name = "pack"
    description = "maximum number of vertex-disjoint cycles, optionally deciding k disjoint cycles"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--g6", metavar="GRAPH6", required=True, help="graph in graph6 format")
        parser.add_argument("--k", type=int, default=None, help="also decide whether k disjoint cycles exist")
        parser.add_argument("--cycle-cap", type=int, default=None, help="maximum number of chordless cycles")
        parser.add_argument("--memo-cap", type=int, default=None, help="memo table size of the branch and bound")

    @staticmethod
    def _model(args: argparse.Namespace) -> PackModel:
        model = PackModel()
        if args.cycle_cap is not None:
            model.cycle_cap = args.cycle_cap
        if args.memo_cap is not None:
            model.memo_cap = args.memo_cap
        return model

    def parameters(self, args: argparse.Namespace) -> dict:
        model = self._model(args)
        return {"g6": args.g6, "k": args.k, "cycle_cap": model.cycle_cap, "memo_cap": model.memo_cap}

    def run(self, args: argparse.Namespace) -> dict:
        return self._model(args).pack(args.g6, args.k)
