"""保持可行性的谱半径爬山

移动按固定顺序尝试, 接受第一个保持 nu < k 且使 rho 增加超过 1e-10 的移动:
  1. 加一条非边(字典序)
  2. claim3_rewire, hub = 当前的 R'', v3 按 x_v3 递增
  3. claim3_rewire, hub = Perron 分量最大的 2k-1 个顶点
删边永远不会增大 rho, 不作为候选
每次重启在预算内反复从起点爬山, 直到预算用完或达到闭式目标值
第 0 次重启的第一次爬山用固定顺序, 之后的每次爬山用 seed 派生的随机数打乱每一类移动内部的顺序
"""
import math
from typing import Callable, Iterator

import loguru
import numpy as np

from src.common.cycle_packing.packing import has_k_disjoint_cycles
from src.common.exceptions import InvalidParameterError
from src.common.extremal.record import ExtremalRecord, Witness
from src.common.extremal.rewire import claim3_rewire
from src.common.graph.graph import Graph, VertexSet
from src.common.spectral.perron import PerronResult, spectral_radius
from src.common.spectral.split_spectrum import closed_form_split_rho
from src.common.threshold.thresholds import compute_thresholds
from src.core.settings import DEFAULT_LOCAL_SEARCH_BUDGET, LOCAL_SEARCH_MIN_GAIN
from src.signal_bus import SignalBus

Move = Callable[[], Graph]

# 达到闭式目标值的判定精度
_TARGET_TOLERANCE = 1e-6


def _ordered(items: list, rng: np.random.Generator | None) -> list:
    if rng is None:
        return items
    return [items[i] for i in rng.permutation(len(items))]


def _rewire_moves(graph: Graph, perron: PerronResult, hub: VertexSet, rng) -> list[Move]:
    moves: list[Move] = []
    x = perron.x
    for v3 in sorted(range(graph.n), key=lambda v: (x[v], v)):
        if v3 in hub or hub.members & ~graph.rows[v3] & ~(1 << v3) == 0:
            continue
        for v4 in graph.neighborhood(v3):
            if v4 in hub:
                continue
            moves.append(lambda v3=v3, v4=v4: claim3_rewire(graph, v3, v4, hub))
    return _ordered(moves, rng)


def _moves(graph: Graph, perron: PerronResult, k: int, rng) -> Iterator[Move]:
    additions = [lambda u=u, v=v: graph.add_edge(u, v) for u, v in graph.non_edges()]
    yield from _ordered(additions, rng)
    if graph.edge_count == 0:
        return
    thresholds = compute_thresholds(graph, perron, k)
    r_dprime = thresholds.R_dprime
    yield from _rewire_moves(graph, perron, r_dprime, rng)
    top = sorted(range(graph.n), key=lambda v: (-perron.x[v], v))[:2 * k - 1]
    top_hub = VertexSet.of(graph.n, top)
    if top_hub != r_dprime:
        yield from _rewire_moves(graph, perron, top_hub, rng)


def _is_feasible(graph: Graph, k: int) -> bool:
    return not has_k_disjoint_cycles(graph, k).found


def _climb(start: Graph, k: int, budget: int, restart: int, rng) -> tuple[Graph, float, int, int]:
    """返回 (最好的图, rho, 评估过的移动数, 接受的移动数)"""
    current = start
    perron = spectral_radius(current)
    evaluated = accepted = 0
    while evaluated < budget:
        improved = False
        for move in _moves(current, perron, k, rng):
            if evaluated >= budget:
                break
            candidate = move()
            evaluated += 1
            if not _is_feasible(candidate, k):
                continue
            candidate_perron = spectral_radius(candidate)
            if candidate_perron.rho > perron.rho + LOCAL_SEARCH_MIN_GAIN:
                current, perron = candidate, candidate_perron
                accepted += 1
                improved = True
                SignalBus().local_search_improved.emit(restart, evaluated, perron.rho)
                break
        if not improved:
            break
    return current, perron.rho, evaluated, accepted


def local_search(
        start: Graph,
        k: int,
        budget: int = DEFAULT_LOCAL_SEARCH_BUDGET,
        restarts: int = 1,
        seed: int = 0,
) -> ExtremalRecord:
    """从可行图 start 出发的首次改进爬山, 结果永远是 exact=False

    budget 是每次重启可以评估的移动数, 用完或达到闭式目标值才停止; budget = 0 时直接返回 start
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    if budget < 0 or restarts < 1:
        raise InvalidParameterError(f"budget must be >= 0 and restarts >= 1, got {budget}, {restarts}")
    if not _is_feasible(start, k):
        raise InvalidParameterError(f"initial graph already contains {k} disjoint cycles")

    rng = np.random.default_rng(seed)
    start_rho = spectral_radius(start).rho
    target = closed_form_split_rho(start.n, k) if start.n > 2 * k - 1 else None

    def reached(rho: float) -> bool:
        return target is not None and math.isclose(rho, target, rel_tol=0.0, abs_tol=_TARGET_TOLERANCE)

    best, best_rho = start, start_rho
    examined = accepted_total = climbs = 0
    for restart in range(restarts):
        remaining = budget
        while remaining > 0:
            order = None if restart == 0 and remaining == budget else rng
            graph, rho, evaluated, accepted = _climb(start, k, remaining, restart, order)
            climbs += 1
            remaining -= evaluated
            examined += evaluated
            accepted_total += accepted
            loguru.logger.debug(
                f"第 {restart} 次重启第 {climbs} 次爬山: rho={rho:.12f}, 评估 {evaluated} 次, 接受 {accepted} 次"
            )
            if rho > best_rho + LOCAL_SEARCH_MIN_GAIN:
                best, best_rho = graph, rho
            # 没有任何候选移动时再爬也不会变化
            if evaluated == 0 or reached(best_rho):
                break
        if reached(best_rho):
            break

    stats = {
        "budget": budget,
        "restarts": restarts,
        "seed": seed,
        "climbs": climbs,
        "accepted_moves": accepted_total,
        "start_rho": start_rho,
    }
    if target is not None:
        stats["target_rho"] = target
        stats["reached_target"] = reached(best_rho)
    loguru.logger.info(f"local search (n={start.n}, k={k}): 最好 rho={best_rho:.12f}, 共 {climbs} 次爬山")
    return ExtremalRecord(
        "spectral-radius", start.n, k, "local-search", best_rho, (Witness.of(best),), examined, False, stats
    )
