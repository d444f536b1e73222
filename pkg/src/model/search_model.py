import math
import os
from typing import Optional

import loguru

from src.common.exceptions import InvalidParameterError
from src.common.extremal.record import ExtremalRecord, SearchSpec
from src.common.extremal.search import run_search
from src.common.graph.canonical import canonical_form
from src.common.graph.graph import make_complete_split
from src.common.graph.graph6 import parse_graph6
from src.common.spectral.split_spectrum import closed_form_split_rho, erdos_posa_edge_bound
from src.common.threshold.thresholds import hypothesis_n
from src.config import cfg
from src.core.settings import CANONICAL_FORM_HARD_CAP, CAP_OVERRIDE_ENV

# 穷举结果与闭式预测值比较时的相对误差
MATCH_TOLERANCE: float = 1e-9


class SearchModel:
    def __init__(self):
        self.jobs: int = cfg.get(cfg.jobs)
        self.tie_tolerance: float = cfg.get(cfg.spectral_tie_tolerance)
        self.budget: int = cfg.get(cfg.local_search_budget)
        self.restarts: int = cfg.get(cfg.local_search_restarts)

    @staticmethod
    def resolve_cap(flag: Optional[int] = None) -> int:
        """穷举上限: --cap > 环境变量 SEL_CAP_OVERRIDE > 配置文件, 都不能超过规范形的硬上限"""
        if flag is not None:
            cap, source = flag, "--cap"
        elif os.environ.get(CAP_OVERRIDE_ENV):
            text = os.environ[CAP_OVERRIDE_ENV]
            try:
                cap = int(text)
            except ValueError as e:
                raise InvalidParameterError(f"{CAP_OVERRIDE_ENV} must be an integer, got {text!r}") from e
            source = CAP_OVERRIDE_ENV
        else:
            cap, source = cfg.get(cfg.enumeration_cap), "config"
        if not 1 <= cap <= CANONICAL_FORM_HARD_CAP:
            raise InvalidParameterError(f"enumeration cap must be in 1..{CANONICAL_FORM_HARD_CAP}, got {cap}")
        loguru.logger.debug(f"穷举上限 {cap} (来自 {source})")
        return cap

    def search(
            self,
            n: int,
            k: int,
            objective: str,
            mode: str,
            seed: int = 0,
            cap: Optional[int] = None,
            start: Optional[str] = None,
    ) -> dict:
        spec = SearchSpec(
            n=n,
            k=k,
            objective=objective,
            mode=mode,
            seed=seed,
            cap=self.resolve_cap(cap),
            jobs=self.jobs,
            budget=self.budget,
            restarts=self.restarts,
            tie_tolerance=self.tie_tolerance,
            start=parse_graph6(start) if start is not None else None,
        )
        record = run_search(spec)
        result = record.to_dict()
        if spec.mode == "exhaustive":
            result["prediction"] = self.prediction(record)
        return result

    @staticmethod
    def prediction(record: ExtremalRecord) -> dict:
        """穷举结果与 f(n,k) / rho(S_{n,2k-1}) 的比较

        n 远小于定理要求的 16(2k-1)/lambda^2, 一致只是经验上的外推
        """
        n, k = record.n, record.k
        payload: dict = {
            "regime": "empirical extension",
            "hypothesis_n": hypothesis_n(k),
        }
        if n <= 2 * k - 1:
            payload.update({
                "predicted": None,
                "match": None,
                "extremal_graph_among_witnesses": None,
                "unique_witness_is_extremal_graph": None,
            })
            return payload
        if record.objective == "edges":
            predicted = erdos_posa_edge_bound(n, k)
            match = record.optimum == predicted
        else:
            predicted = closed_form_split_rho(n, k)
            match = math.isclose(record.optimum, predicted, rel_tol=MATCH_TOLERANCE, abs_tol=MATCH_TOLERANCE)
        split_key = canonical_form(make_complete_split(n, 2 * k - 1))
        keys = [witness.key for witness in record.witnesses]
        payload.update({
            "predicted": predicted,
            "match": match,
            "extremal_graph_among_witnesses": split_key in keys,
            "unique_witness_is_extremal_graph": keys == [split_key],
        })
        if not match:
            loguru.logger.warning(f"n={n}, k={k}: 最优值 {record.optimum!r} 与预测值 {predicted!r} 不一致")
        return payload
