import argparse

from src.common.workbench_command.command import CommandBase
from src.model.rho_model import RhoModel


class CommandRho(CommandBase):
    name = "rho"
    description = "spectral radius and Perron vector of a graph6 graph or of S_(n,2k-1)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--g6", metavar="GRAPH6", help="graph in graph6 format")
        source.add_argument("--split", nargs=2, type=int, metavar=("N", "K"), help="complete split graph S_(N,2K-1)")
        parser.add_argument("--tol", type=float, default=None, help="power iteration tolerance")
        parser.add_argument("--max-iterations", type=int, default=None)
        parser.add_argument("--dense-check", action="store_true", help="cross-check with a dense eigensolver")

    @staticmethod
    def _model(args: argparse.Namespace) -> RhoModel:
        model = RhoModel()
        if args.tol is not None:
            model.tolerance = args.tol
        if args.max_iterations is not None:
            model.max_iterations = args.max_iterations
        return model

    def parameters(self, args: argparse.Namespace) -> dict:
        model = self._model(args)
        return {
            "g6": args.g6,
            "split": list(args.split) if args.split else None,
            "tol": model.tolerance,
            "max_iterations": model.max_iterations,
            "dense_check": args.dense_check,
        }

    def run(self, args: argparse.Namespace) -> dict:
        model = self._model(args)
        if args.split:
            n, k = args.split
            return model.rho_of_split(n, k, args.dense_check)
        return model.rho_of_graph6(args.g6, args.dense_check)
