import argparse

from src.common.workbench_command.command import CommandBase
from src.model.search_model import SearchModel

# 命令行里的简写
MODE_ALIASES: dict[str, str] = {
    "exhaustive": "exhaustive",
    "local": "local-search",
    "local-search": "local-search",
}


class CommandSearch(CommandBase):
    name = "search"
    description = "extremal graphs without k disjoint cycles, by exhaustive enumeration or local search"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("n", type=int)
        parser.add_argument("k", type=int)
        objective = parser.add_mutually_exclusive_group(required=True)
        objective.add_argument("--edges", dest="objective", action="store_const", const="edges")
        objective.add_argument("--spectral", dest="objective", action="store_const", const="spectral-radius")
        parser.add_argument("--mode", choices=sorted(MODE_ALIASES), default="exhaustive")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--cap", type=int, default=None, help="override the exhaustive enumeration cap")
        parser.add_argument("--jobs", type=int, default=None, help="worker processes for enumeration")
        parser.add_argument("--budget", type=int, default=None, help="moves evaluated per local search restart")
        parser.add_argument("--restarts", type=int, default=None)
        parser.add_argument("--start", metavar="GRAPH6", default=None, help="start graph for local search")

    @staticmethod
    def _model(args: argparse.Namespace) -> SearchModel:
        model = SearchModel()
        if args.jobs is not None:
            model.jobs = args.jobs
        if args.budget is not None:
            model.budget = args.budget
        if args.restarts is not None:
            model.restarts = args.restarts
        return model

    def parameters(self, args: argparse.Namespace) -> dict:
        model = self._model(args)
        mode = MODE_ALIASES[args.mode]
        local = mode == "local-search"
        # jobs 不影响结果, 不写入报告
        return {
            "n": args.n,
            "k": args.k,
            "objective": args.objective,
            "mode": mode,
            "seed": args.seed,
            "cap": None if local else model.resolve_cap(args.cap),
            "budget": model.budget if local else None,
            "restarts": model.restarts if local else None,
            "start": args.start,
        }

    def run(self, args: argparse.Namespace) -> dict:
        model = self._model(args)
        return model.search(
            args.n, args.k, args.objective, MODE_ALIASES[args.mode], seed=args.seed, cap=args.cap, start=args.start
        )
