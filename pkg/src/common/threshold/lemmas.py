"""引理结论的可检查报告

每一项都记录 结论的界 / 实测值 / 假设是否成立. 假设不成立时该项只作为参考, 状态为 not-applicable, 永远不会是 fail
2.1 的假设是 k >= 2 且 n >= 2k+3, 其余各项的假设是 k >= 2 且 n >= 16(2k-1)/lambda^2
"""
import math
from dataclasses import asdict, dataclass
from typing import Callable, Optional

import loguru

from src.common.exceptions import InvalidParameterError, UnsupportedSizeError
from src.common.graph.graph import Graph
from src.common.threshold.class_graph import ClassGraph
from src.common.threshold.thresholds import ThresholdSets, hypothesis_n
from src.core.settings import EXPAND_LIMIT
from src.utils.bit_utils import BitUtils

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_NOT_APPLICABLE = "not-applicable"

# 浮点比较的相对余量, 只用于 rho 与闭式下界的比较
_RHO_SLACK = 1e-12


@dataclass(frozen=True)
class LemmaEntry:
    lemma: str
    statement: str
    bound: Optional[float]
    measured: Optional[float]
    hypothesis: bool
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class LemmaReport:
    n: int
    k: int
    lambda_: float
    hypothesis_n: int
    hypothesis_met: bool
    entries: tuple[LemmaEntry, ...]

    def entry(self, lemma: str) -> LemmaEntry:
        for entry in self.entries:
            if entry.lemma == lemma:
                return entry
        raise KeyError(lemma)

    @property
    def failures(self) -> list[LemmaEntry]:
        return [entry for entry in self.entries if entry.status == STATUS_FAIL]

    @property
    def all_pass(self) -> bool:
        return all(entry.status == STATUS_PASS for entry in self.entries)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lambda": self.lambda_,
            "hypothesis_n": self.hypothesis_n,
            "hypothesis_met": self.hypothesis_met,
            "entries": [entry.to_dict() for entry in self.entries],
        }


def lemma_hypothesis_met(n: int, k: int) -> bool:
    return k >= 2 and n >= hypothesis_n(k)


def lower_bound_hypothesis_met(n: int, k: int) -> bool:
    """S_{n,2k-1} 可行且 rho 不小于 sqrt((2k-1)n) 的条件"""
    return k >= 2 and n >= 2 * k + 3


class _EntryBuilder:
    def __init__(self, hypothesis: bool):
        self.hypothesis = hypothesis
        self.entries: list[LemmaEntry] = []

    def add(
            self,
            lemma: str,
            statement: str,
            bound: Optional[float],
            measured: Optional[float],
            holds: Optional[bool],
            detail: str = "",
            hypothesis: Optional[bool] = None,
    ) -> None:
        if hypothesis is None:
            hypothesis = self.hypothesis
        if not hypothesis:
            status = STATUS_NOT_APPLICABLE
        elif holds is None:
            status = STATUS_NOT_APPLICABLE
        else:
            status = STATUS_PASS if holds else STATUS_FAIL
        self.entries.append(LemmaEntry(lemma, statement, bound, measured, hypothesis, status, detail))


# ==========================
# 类层面的计数
# ==========================


def _second_neighborhood_edges(structure: ClassGraph, i: int, r_mask: int) -> int:
    """e(N(v), N^2(v) ∩ R), v 是类 i 中任一顶点

    N(v) 与 N^2(v) 不交, 所以只需要对 N^2(v) ∩ R 中每个顶点数它在 N(v) 中的邻居
    """
    adj_i = structure.adj[i]
    reach = 0
    for j in BitUtils.iter_bits(adj_i):
        reach |= structure.adj[j]
    total = 0
    for j in BitUtils.iter_bits(reach & r_mask & ~adj_i & ~(1 << i)):
        total += structure.sizes[j] * structure.weight(structure.adj[j] & adj_i)
    # 类 i 是独立集时, 同类其他顶点与 v 距离为 2 且邻域相同
    if not structure.internal[i] and r_mask >> i & 1 and reach >> i & 1:
        total += (structure.sizes[i] - 1) * structure.weight(adj_i)
    return total


def _outside_to_inside_edges(structure: ClassGraph, i: int, r_prime: int) -> int:
    """e(N(v) - R', R' - {v}), v 是 R' 中类 i 的任一顶点"""
    total = 0
    for j in BitUtils.iter_bits(structure.adj[i] & ~r_prime):
        total += structure.sizes[j] * (structure.weight(structure.adj[j] & r_prime) - 1)
    return total


def _is_acyclic(structure: ClassGraph, mask: int) -> Optional[bool]:
    """G[mask] 是否无圈, 规模太大又不是独立集时返回 None"""
    if structure.is_independent(mask):
        return True
    if structure.n > EXPAND_LIMIT:
        return None
    graph = structure.expand()
    subgraph, _ = graph.induced_subgraph(structure.vertex_set(mask))
    return subgraph.is_forest()


def _is_complete_split(structure: ClassGraph, c: int) -> bool:
    """度序列判定 G 是否同构于 S_{n,c}

    c 个度为 n-1 的顶点与其余度为 c 的顶点只能构成 S_{n,c}
    """
    n = structure.n
    universal = 0
    for i in range(structure.class_count):
        degree = structure.degree(i)
        if degree == n - 1:
            universal += structure.sizes[i]
        elif degree != c:
            return False
    return universal == c or (c == n - 1 and universal == n)


def _extreme(
        structure: ClassGraph, mask: int, value: Callable[[int], float], pick: Callable = min
) -> Optional[float]:
    values = [value(i) for i in BitUtils.iter_bits(mask)]
    return pick(values) if values else None


# ==========================
# 报告
# ==========================


def verify_lemma_bounds(t: ThresholdSets, graph: Optional[Graph], k: int) -> LemmaReport:
    """在阈值集合上逐项检查引理结论

    graph 为 None 时使用 t 自带的类结构(解析情形)
    """
    if k != t.k:
        raise InvalidParameterError(f"threshold sets were computed for k={t.k}, not k={k}")
    structure = t.structure
    if graph is not None and graph.n != structure.n:
        raise InvalidParameterError("threshold sets were computed on a different graph")
    n = structure.n
    lam = t.lambda_
    masks = t.masks
    hypothesis = lemma_hypothesis_met(n, k)
    builder = _EntryBuilder(hypothesis)
    loguru.logger.debug(f"检查引理结论: n={n}, k={k}, 假设成立={hypothesis}")

    lower = math.sqrt((2 * k - 1) * n)
    builder.add(
        "2.1", "rho >= sqrt((2k-1)n)", lower, t.rho,
        t.rho >= lower * (1 - _RHO_SLACK),
        hypothesis=lower_bound_hypothesis_met(n, k),
    )

    size_r = t.size("R")
    bound = 2 * math.sqrt((2 * k - 1) * n)
    builder.add("2.2", "|R| <= 2 sqrt((2k-1)n)", bound, size_r, size_r <= bound)

    low_degree = 0
    for i in range(structure.class_count):
        if structure.degree(i) <= lam * n / 3:
            low_degree |= 1 << i
    bound = (5 * k / 3 - 1) * lam * n
    if low_degree:
        cache: dict[tuple[int, bool], int] = {}

        def second_edges(i: int) -> int:
            key = (structure.adj[i], bool(masks["R"] >> i & 1))
            if not structure.is_explicit:
                return _second_neighborhood_edges(structure, i, masks["R"])
            if key not in cache:
                cache[key] = _second_neighborhood_edges(structure, i, masks["R"])
            return cache[key]

        measured = _extreme(structure, low_degree, second_edges, max)
        builder.add(
            "2.3", "e(N(v), N^2(v) ∩ R) <= (5k/3-1) lambda n for d(v) <= lambda n/3",
            bound, measured, measured <= bound,
        )
    else:
        builder.add(
            "2.3", "e(N(v), N^2(v) ∩ R) <= (5k/3-1) lambda n for d(v) <= lambda n/3",
            bound, None, True, "no vertex with d(v) <= lambda n/3",
        )

    size_rp = t.size("R_prime")
    bound = 6 * k / lam
    builder.add("2.4a", "|R'| <= 6k/lambda", bound, size_rp, size_rp <= bound)

    bound = lam * n / 3
    measured = _extreme(structure, masks["R_prime"], structure.degree)
    builder.add(
        "2.4b", "d(v) > lambda n/3 for v in R'", bound, measured,
        measured is None or measured > bound,
    )

    def excess(i: int) -> int:
        rhs = (2 * k - 2) * structure.degree(i) + (2 * k - 1) * size_rp
        return _outside_to_inside_edges(structure, i, masks["R_prime"]) - rhs

    measured = _extreme(structure, masks["R_prime"], excess, max)
    builder.add(
        "2.5", "e(N(v) - R', R' - {v}) - (2k-2)d(v) - (2k-1)|R'| <= 0 for v in R'", 0, measured,
        measured is None or measured <= 0,
    )

    def margin(i: int) -> float:
        return structure.degree(i) - (t.class_ratios[i] - 1 / (12 * k)) * n

    measured = _extreme(structure, masks["R_dprime"], margin)
    builder.add(
        "2.6", "d(v) - (mu - 1/(12k))n > 0 for v in R'' with x_v = mu x_u*", 0, measured,
        measured is None or measured > 0,
    )

    bound = (1 - 5 / (12 * k)) * n
    measured = _extreme(structure, masks["R_dprime"], structure.degree)
    builder.add(
        "2.7", "d(v) >= (1 - 5/(12k))n for v in R''", bound, measured,
        measured is None or measured >= bound,
    )
    bound = 1 - 1 / (3 * k)
    measured = _extreme(structure, masks["R_dprime"], lambda i: t.class_ratios[i])
    builder.add(
        "2.7-ratio", "x_v >= (1 - 1/(3k)) x_u* for v in R''", bound, measured,
        measured is None or measured >= bound,
    )

    size_rdp = t.size("R_dprime")
    builder.add("2.9", "|R''| = 2k-1", 2 * k - 1, size_rdp, size_rdp == 2 * k - 1)

    _final_structure_entries(builder, t, k)
    return LemmaReport(n, k, lam, hypothesis_n(k), hypothesis, tuple(builder.entries))


def _final_structure_entries(builder: _EntryBuilder, t: ThresholdSets, k: int) -> None:
    """最终证明中的结构结论: |R'''| > n/6, R'' 是团, G[R''' ∪ R''''] 是独立集, G 同构于 S_{n,2k-1}"""
    structure = t.structure
    n = structure.n
    masks = t.masks
    rest = masks["R_tprime"] | masks["R_qprime"]

    size_rtp = t.size("R_tprime")
    builder.add("final-R'''", "|R'''| > n/6", n / 6, size_rtp, 6 * size_rtp > n)

    clique = structure.is_clique(masks["R_dprime"])
    builder.add("final-clique", "R'' is a clique", None, None, clique)

    try:
        acyclic = _is_acyclic(structure, rest)
    except UnsupportedSizeError:
        acyclic = None
    builder.add(
        "claim-2", "G[R''' ∪ R''''] is acyclic", None, None, acyclic,
        "" if acyclic is not None else f"not computed for n > {EXPAND_LIMIT}",
    )

    leaves = sum(
        structure.sizes[i] for i in BitUtils.iter_bits(rest) if structure.degree_within(i, rest) == 1
    )
    builder.add("claim-3", "G[R''' ∪ R''''] has no vertex of degree one", 0, leaves, leaves == 0)

    independent = structure.is_independent(rest)
    builder.add("final-independent", "R''' ∪ R'''' is an independent set", None, None, independent)

    c = 2 * k - 1
    isomorphic = c < n and _is_complete_split(structure, c)
    builder.add("final-isomorphism", "G is isomorphic to S_(n,2k-1)", None, None, isomorphic)
