import argparse

from src.common.workbench_command.command import CommandBase
from src.model.lemmas_model import LemmasModel


class CommandLemmas(CommandBase):
    name = "lemmas"
    description = "threshold sets and lemma conclusions on S_(n,2k-1)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("n", type=int)
        parser.add_argument("k", type=int)
        parser.add_argument(
            "--analytic", action="store_true", help="use the two-valued Perron profile (n up to 10^12)"
        )
        parser.add_argument("--slack", type=float, default=None, help="slack for the threshold comparisons")

    @staticmethod
    def _model(args: argparse.Namespace) -> LemmasModel:
        model = LemmasModel()
        if args.slack is not None:
            model.slack = args.slack
        return model

    def parameters(self, args: argparse.Namespace) -> dict:
        return {"n": args.n, "k": args.k, "analytic": args.analytic, "slack": self._model(args).slack}

    def run(self, args: argparse.Namespace) -> dict:
        model = self._model(args)
        if args.analytic:
            return model.analytic(args.n, args.k)
        return model.dense(args.n, args.k)
