from src.common.exceptions import UnsupportedSizeError
from src.common.graph.graph import make_complete_split
from src.common.spectral.perron import spectral_radius
from src.common.threshold.biclique import check_common_neighborhood_kkk
from src.common.threshold.lemmas import verify_lemma_bounds
from src.common.threshold.set_bounds import set_intersection_bound
from src.common.threshold.thresholds import compute_thresholds, split_threshold_structure
from src.config import cfg


class LemmasModel:
    def __init__(self):
        self.slack: float = cfg.get(cfg.slack)
        self.dense_limit: int = cfg.get(cfg.dense_limit)
        self.tolerance: float = cfg.get(cfg.tolerance)
        self.max_iterations: int = cfg.get(cfg.max_iterations)

    def analytic(self, n: int, k: int) -> dict:
        """由两值 Perron 向量直接得到 S_{n,2k-1} 的阈值集合, n 可以到 10^12"""
        thresholds = split_threshold_structure(n, k, self.slack)
        report = verify_lemma_bounds(thresholds, None, k)
        biclique = check_common_neighborhood_kkk(thresholds, None, k)
        return {
            "mode": "analytic",
            "thresholds": thresholds.to_dict(),
            "lemmas": report.to_dict(),
            "biclique": biclique.to_dict(),
        }

    def dense(self, n: int, k: int) -> dict:
        """在显式的 S_{n,2k-1} 上做幂迭代后计算"""
        if n > self.dense_limit:
            raise UnsupportedSizeError(
                f"dense lemma checks are limited to n <= {self.dense_limit}, got n={n}; use --analytic"
            )
        graph = make_complete_split(n, 2 * k - 1)
        perron = spectral_radius(graph, self.tolerance, self.max_iterations)
        thresholds = compute_thresholds(graph, perron, k, self.slack)
        report = verify_lemma_bounds(thresholds, graph, k)
        biclique = check_common_neighborhood_kkk(thresholds, graph, k)
        # R'' 中顶点邻域的交, 即 R''' 的大小
        intersection = lower = None
        if len(thresholds.R_dprime):
            intersection, lower = set_intersection_bound(
                [set(graph.neighborhood(v)) for v in thresholds.R_dprime]
            )
        return {
            "mode": "dense",
            "rho": perron.rho,
            "residual": perron.residual,
            "thresholds": thresholds.to_dict(),
            "lemmas": report.to_dict(),
            "biclique": biclique.to_dict(),
            "common_neighborhood_bound": {"intersection": intersection, "lower_bound": lower},
        }
