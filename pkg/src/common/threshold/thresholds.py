from dataclasses import dataclass
from fractions import Fraction

import loguru

from src.common.exceptions import ConvergenceError, InvalidParameterError, UnsupportedSizeError
from src.common.graph.graph import Graph, VertexSet
from src.common.spectral.perron import PerronResult
from src.common.spectral.split_spectrum import split_perron_profile
from src.common.threshold.class_graph import ClassGraph
from src.core.settings import ANALYTIC_N_LIMIT
from src.utils.bit_utils import BitUtils

SET_NAMES: tuple[str, ...] = ("R", "R_prime", "R_dprime", "R_tprime", "R_qprime")


def threshold_lambda(k: int) -> float:
    """lambda = 1/(120k^2)"""
    return 1.0 / (120 * k * k)


def hypothesis_n(k: int) -> int:
    """16(2k-1)/lambda^2, 是整数"""
    return 16 * (2 * k - 1) * (120 * k * k) ** 2


@dataclass(frozen=True)
class ThresholdSets:
    """Perron 向量的阈值集合

    集合按类的位集合保存(见 ClassGraph), 显式图时就是顶点位集合:
      R  = {v: x_v >  lambda x_u*}
      R' = {v: x_v > 4lambda x_u*}
      R''= {v: x_v >= x_u*/(4k)}
      R'''= {v: R'' 包含于 N(v)},  R'''' = V - (R'' | R''')
    """
    k: int
    lambda_: float
    slack: float
    rho: float
    u_star: int
    structure: ClassGraph
    class_ratios: tuple[float, ...]
    masks: dict[str, int]

    @property
    def n(self) -> int:
        return self.structure.n

    def size(self, name: str) -> int:
        return self.structure.weight(self.masks[name])

    def sizes(self) -> dict[str, int]:
        return {name: self.size(name) for name in SET_NAMES}

    def vertex_set(self, name: str) -> VertexSet:
        return self.structure.vertex_set(self.masks[name])

    def class_labels(self, name: str) -> list[str]:
        return [self.structure.labels[i] for i in BitUtils.iter_bits(self.masks[name])]

    def ratio_of(self, v: int) -> float:
        return self.class_ratios[self.structure.class_of(v)]

    @property
    def R(self) -> VertexSet:
        return self.vertex_set("R")

    @property
    def R_prime(self) -> VertexSet:
        return self.vertex_set("R_prime")

    @property
    def R_dprime(self) -> VertexSet:
        return self.vertex_set("R_dprime")

    @property
    def R_tprime(self) -> VertexSet:
        return self.vertex_set("R_tprime")

    @property
    def R_qprime(self) -> VertexSet:
        return self.vertex_set("R_qprime")

    @property
    def ratios(self) -> list[float]:
        """每个顶点的 x_v / x_u*"""
        if self.n > 10**6:
            raise UnsupportedSizeError(f"per-vertex ratios are not materialized for n={self.n}")
        return [ratio for i, ratio in enumerate(self.class_ratios) for _ in range(self.structure.sizes[i])]

    def to_dict(self) -> dict:
        payload = {
            "k": self.k,
            "lambda": self.lambda_,
            "slack": self.slack,
            "rho": self.rho,
            "u_star": self.u_star,
            "sizes": self.sizes(),
        }
        if self.structure.is_explicit:
            payload["sets"] = {name: self.vertex_set(name).to_list() for name in SET_NAMES}
            payload["ratios"] = list(self.class_ratios)
        else:
            payload["classes"] = {name: self.class_labels(name) for name in SET_NAMES}
            payload["class_ratios"] = dict(zip(self.structure.labels, self.class_ratios))
        return payload


def _classify(
        structure: ClassGraph, class_ratios: tuple[float, ...], k: int, slack: float
) -> dict[str, int]:
    lambda_ = threshold_lambda(k)
    quarter_k = float(Fraction(1, 4 * k))
    r_mask = r_prime = r_dprime = 0
    for i, ratio in enumerate(class_ratios):
        if ratio > lambda_ - slack:
            r_mask |= 1 << i
        if ratio > 4 * lambda_ - slack:
            r_prime |= 1 << i
        if ratio >= quarter_k - slack:
            r_dprime |= 1 << i
    r_tprime = 0
    for i in range(structure.class_count):
        # 类 i 在 R'' 中时, 它的顶点不与自己相邻, 所以不可能属于 R'''
        if not r_dprime >> i & 1 and r_dprime & ~structure.adj[i] == 0:
            r_tprime |= 1 << i
    r_qprime = structure.all_classes() & ~(r_dprime | r_tprime)
    return {"R": r_mask, "R_prime": r_prime, "R_dprime": r_dprime, "R_tprime": r_tprime, "R_qprime": r_qprime}


def compute_thresholds(graph: Graph, perron: PerronResult, k: int, slack: float = 0.0) -> ThresholdSets:
    """在显式图上计算阈值集合

    图不连通时 Perron 向量在实现 rho 的分量之外为 0, 这些顶点不会进入 R / R' / R''
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    if not perron.converged:
        raise ConvergenceError(
            f"Perron vector did not converge (residual {perron.residual:.3e} after {perron.iterations} iterations)"
        )
    if perron.x.shape[0] != graph.n:
        raise InvalidParameterError("Perron vector does not match the graph order")
    structure = ClassGraph.from_graph(graph)
    u_star = perron.u_star
    class_ratios = tuple(float(value) for value in perron.ratios())
    masks = _classify(structure, class_ratios, k, slack)
    loguru.logger.debug(f"阈值集合大小: { {name: BitUtils.popcount(mask) for name, mask in masks.items()} }")
    return ThresholdSets(k, threshold_lambda(k), slack, perron.rho, u_star, structure, class_ratios, masks)


def split_threshold_structure(n: int, k: int, slack: float = 0.0) -> ThresholdSets:
    """S_{n,2k-1} 的阈值集合, 由两值 Perron 向量直接得到, 不构造邻接矩阵"""
    if n > ANALYTIC_N_LIMIT:
        raise UnsupportedSizeError(f"analytic threshold structure supports n <= {ANALYTIC_N_LIMIT}, got n={n}")
    profile = split_perron_profile(n, k)
    structure = ClassGraph.complete_split(n, 2 * k - 1)
    class_ratios = (1.0, profile.ratio)
    masks = _classify(structure, class_ratios, k, slack)
    return ThresholdSets(k, threshold_lambda(k), slack, profile.rho, 0, structure, class_ratios, masks)
