"""按边数逐层的可行图穷举

"不含 k 个不交圈" 对删边封闭, 所以每个可行图都能从空图出发逐条加边得到, 且路径上的图都可行.
第 e 层保存所有 e 条边的可行同构类(规范键), 由第 e-1 层的每个图加一条非边生成;
含 k 个不交圈的子图直接丢弃, 其后代也不会再被生成.
一个图没有可行的加边子图时, 它是边极大的
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional

import loguru

from src.common.cycle_packing.packing import has_k_disjoint_cycles
from src.common.exceptions import CapExceededError, InvalidParameterError, UnsupportedSizeError
from src.common.graph.canonical import canonical_form
from src.common.graph.graph import Graph
from src.core.settings import (
    CANONICAL_FORM_HARD_CAP,
    DEFAULT_CHORDLESS_CYCLE_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_MEMO_CAP,
)
from src.signal_bus import SignalBus

# visitor(graph, maximal): graph 是可行图(规范编号), maximal 表示它没有可行的加边子图
Visitor = Callable[[Graph, bool], None]

# 每个子进程一次处理的父图数量
_BATCH_SIZE = 64


@dataclass
class EnumerationStats:
    n: int
    k: int
    visited: int = 0
    edge_maximal: int = 0
    children_generated: int = 0
    children_infeasible: int = 0
    per_level: list[int] = field(default_factory=list)
    prune_infeasible: bool = True
    reject_isomorphs: bool = True

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "visited": self.visited,
            "edge_maximal": self.edge_maximal,
            "children_generated": self.children_generated,
            "children_infeasible": self.children_infeasible,
            "per_level": list(self.per_level),
            "prune_infeasible": self.prune_infeasible,
            "reject_isomorphs": self.reject_isomorphs,
        }


@dataclass(frozen=True)
class _Options:
    n: int
    k: int
    reject_isomorphs: bool
    prune_infeasible: bool
    cycle_cap: Optional[int]
    memo_cap: Optional[int]


@dataclass(frozen=True)
class _Expansion:
    maximal: bool
    children: tuple[tuple[Hashable, bool], ...]  # (键, 是否可行)
    infeasible: int
    generated: int


def _key_of(graph: Graph, options: _Options) -> Hashable:
    if options.reject_isomorphs:
        return canonical_form(graph)
    return graph.rows


def _graph_of(key: Hashable, options: _Options) -> Graph:
    if options.reject_isomorphs:
        return key.to_graph()  # type: ignore[union-attr]
    return Graph(options.n, key)  # type: ignore[arg-type]


def _is_feasible(graph: Graph, options: _Options) -> bool:
    result = has_k_disjoint_cycles(graph, options.k, options.cycle_cap, options.memo_cap)
    if not result.found and not result.exact:
        raise CapExceededError(f"feasibility of {graph!r} undecided: chordless cycle cap reached")
    return not result.found


def _expand(key: Hashable, options: _Options) -> _Expansion:
    """生成一个父图的所有加边子图

    同一对孪生类之间的非边给出同构的子图, 只保留一条
    """
    graph = _graph_of(key, options)
    representatives = graph.twin_representatives()
    seen_pairs: set[tuple[int, int]] = set()
    children: dict[Hashable, bool] = {}
    generated = infeasible = 0
    maximal = True
    for u, v in graph.non_edges():
        if options.reject_isomorphs:
            pair = tuple(sorted((representatives[u], representatives[v])))
            if pair in seen_pairs:
                continue
            seen_pairs.add(pair)
        child = graph.add_edge(u, v)
        generated += 1
        feasible = _is_feasible(child, options)
        if feasible:
            maximal = False
        else:
            infeasible += 1
            if options.prune_infeasible:
                continue
        children.setdefault(_key_of(child, options), feasible)
    return _Expansion(maximal, tuple(children.items()), infeasible, generated)


def _expand_batch(keys: list[Hashable], options: _Options) -> list[_Expansion]:
    return [_expand(key, options) for key in keys]


def enumerate_feasible(
        n: int,
        k: int,
        visitor: Optional[Visitor] = None,
        cap: int = DEFAULT_ENUMERATION_CAP,
        jobs: int = 1,
        prune_infeasible: bool = True,
        reject_isomorphs: bool = True,
        cycle_cap: Optional[int] = DEFAULT_CHORDLESS_CYCLE_CAP,
        memo_cap: Optional[int] = DEFAULT_MEMO_CAP,
) -> EnumerationStats:
    """访问每个 n 顶点、nu < k 的同构类恰好一次

    Args:
        prune_infeasible: 关闭后不可行的图也继续扩展(只用于验证剪枝的正确性)
        reject_isomorphs: 关闭后按带标号的图去重(只用于验证同构剔除的正确性)

    Raises:
        CapExceededError: n 超过 cap
    """
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    if n > cap:
        raise CapExceededError(f"exhaustive enumeration is capped at n <= {cap}, got n={n}")
    if reject_isomorphs and n > CANONICAL_FORM_HARD_CAP:
        raise UnsupportedSizeError(f"isomorph rejection supports n <= {CANONICAL_FORM_HARD_CAP}, got n={n}")

    options = _Options(n, k, reject_isomorphs, prune_infeasible, cycle_cap, memo_cap)
    stats = EnumerationStats(n, k, prune_infeasible=prune_infeasible, reject_isomorphs=reject_isomorphs)
    level: dict[Hashable, bool] = {_key_of(Graph.empty(n), options): True}
    edges = 0
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while level:
            keys = sorted(level)  # type: ignore[type-var]
            if executor is None:
                expansions = _expand_batch(keys, options)
            else:
                batches = [keys[i:i + _BATCH_SIZE] for i in range(0, len(keys), _BATCH_SIZE)]
                expansions = [
                    expansion
                    for batch in executor.map(_expand_batch, batches, [options] * len(batches))
                    for expansion in batch
                ]
            next_level: dict[Hashable, bool] = {}
            feasible_count = 0
            for key, expansion in zip(keys, expansions):
                stats.children_generated += expansion.generated
                stats.children_infeasible += expansion.infeasible
                for child, feasible in expansion.children:
                    next_level.setdefault(child, feasible)
                if not level[key]:
                    continue
                feasible_count += 1
                stats.visited += 1
                if expansion.maximal:
                    stats.edge_maximal += 1
                if visitor is not None:
                    visitor(_graph_of(key, options), expansion.maximal)
            stats.per_level.append(feasible_count)
            loguru.logger.debug(f"n={n}, k={k}: {edges} 条边的可行类 {feasible_count} 个")
            SignalBus().enumeration_level_done.emit(n, edges, feasible_count)
            level = next_level
            edges += 1
    finally:
        if executor is not None:
            executor.shutdown()
    loguru.logger.info(f"n={n}, k={k}: 共访问 {stats.visited} 个可行类, 其中边极大 {stats.edge_maximal} 个")
    return stats
