from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import loguru

from src.common.cycle_packing.chordless import ChordlessCycle, enumerate_chordless_cycles
from src.common.exceptions import CapExceededError, InvalidParameterError
from src.common.graph.graph import Graph
from src.core.settings import DEFAULT_CHORDLESS_CYCLE_CAP, DEFAULT_MEMO_CAP
from src.signal_bus import SignalBus
from src.utils.bit_utils import BitUtils


@dataclass(frozen=True)
class CyclePacking:
    """两两顶点不交的圈, 每个圈按圈上顺序给出顶点"""
    cycles: tuple[tuple[int, ...], ...] = ()

    def __len__(self) -> int:
        return len(self.cycles)

    def to_list(self) -> list[list[int]]:
        return [list(cycle) for cycle in self.cycles]


@dataclass(frozen=True)
class PackingResult:
    nu: int
    witness: CyclePacking
    exact: bool = True


@dataclass(frozen=True)
class DisjointCyclesResult:
    found: bool
    witness: Optional[CyclePacking] = None
    exact: bool = True

    def __bool__(self) -> bool:
        return self.found


@dataclass
class _CycleIndex:
    """按顶点索引的无弦圈, 每个顶点下按 (长度, 顶点) 排序"""
    n: int
    cycles: Sequence[ChordlessCycle]
    by_vertex: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        self.by_vertex = [[] for _ in range(self.n)]
        ordered = sorted(range(len(self.cycles)), key=lambda i: (self.cycles[i].length, self.cycles[i].vertices))
        for i in ordered:
            for v in self.cycles[i].vertices:
                self.by_vertex[v].append(i)

    def branch_vertex(self, remaining: int) -> tuple[int, int, list[int]]:
        """返回 (去掉无法覆盖顶点后的 remaining, 分支顶点, 可用圈)

        分支顶点是最小的、还能被 remaining 内某个圈覆盖的顶点; 不存在时返回 -1
        """
        for v in BitUtils.iter_bits(remaining):
            usable = [i for i in self.by_vertex[v] if self.cycles[i].mask & ~remaining == 0]
            if usable:
                return remaining, v, usable
            remaining &= ~(1 << v)
        return 0, -1, []


def is_valid_packing(graph: Graph, packing: CyclePacking) -> bool:
    used = 0
    for cycle in packing.cycles:
        if len(cycle) < 3 or len(set(cycle)) != len(cycle):
            return False
        mask = BitUtils.from_indices(cycle)
        if mask & used or mask >> graph.n:
            return False
        used |= mask
        for position, v in enumerate(cycle):
            if not graph.has_edge(v, cycle[(position + 1) % len(cycle)]):
                return False
    return True


def _greedy_packing(cycles: Sequence[ChordlessCycle]) -> CyclePacking:
    used = 0
    chosen = []
    for cycle in sorted(cycles, key=lambda c: (c.length, c.vertices)):
        if cycle.mask & used == 0:
            chosen.append(cycle.order)
            used |= cycle.mask
    return CyclePacking(tuple(chosen))


def max_cycle_packing(
        graph: Graph,
        cycle_cap: Optional[int] = DEFAULT_CHORDLESS_CYCLE_CAP,
        memo_cap: Optional[int] = DEFAULT_MEMO_CAP,
) -> PackingResult:
    """最大顶点不交圈数 nu(G)

    只在无弦圈上做集合装箱: 任意圈的顶点集都包含一个无弦圈, 所以 nu 不变.
    分支: 取最小的可覆盖顶点 v, 依次尝试包含 v 的每个圈, 最后尝试丢弃 v;
    上界为 剩余顶点数 // 3, 记忆化以剩余顶点集为键
    """
    try:
        cycles = enumerate_chordless_cycles(graph, cycle_cap)
    except CapExceededError as e:
        witness = _greedy_packing(e.partial or [])
        loguru.logger.warning(f"无弦圈超过上限, 只给出下界 nu >= {len(witness)}")
        SignalBus().packing_cap_hit.emit(len(witness))
        return PackingResult(len(witness), witness, exact=False)

    index = _CycleIndex(graph.n, cycles)

    @lru_cache(maxsize=memo_cap)
    def solve(remaining: int) -> tuple[int, tuple[int, ...]]:
        remaining, v, usable = index.branch_vertex(remaining)
        if v < 0:
            return 0, ()
        bound = BitUtils.popcount(remaining) // 3
        best: tuple[int, tuple[int, ...]] = (0, ())
        for i in usable:
            count, chosen = solve(remaining & ~cycles[i].mask)
            if count + 1 > best[0]:
                best = (count + 1, (i,) + chosen)
                if best[0] >= bound:
                    return best
        skipped = solve(remaining & ~(1 << v))
        return skipped if skipped[0] > best[0] else best

    nu, chosen = solve(BitUtils.full(graph.n))
    loguru.logger.debug(f"nu={nu}, 无弦圈 {len(cycles)} 个, 记忆表 {solve.cache_info().currsize} 项")
    witness = CyclePacking(tuple(cycles[i].order for i in chosen))
    return PackingResult(nu, witness, exact=True)


def has_k_disjoint_cycles(
        graph: Graph,
        k: int,
        cycle_cap: Optional[int] = DEFAULT_CHORDLESS_CYCLE_CAP,
        memo_cap: Optional[int] = DEFAULT_MEMO_CAP,
) -> DisjointCyclesResult:
    """判定是否存在 k 个顶点不交的圈, 找到 k 个后立即返回

    无弦圈超过上限时只在已枚举的圈中搜索: 找到即为确定的 True, 否则返回 exact=False 的 False
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    exact = True
    try:
        cycles = enumerate_chordless_cycles(graph, cycle_cap)
    except CapExceededError as e:
        cycles = e.partial or []
        exact = False

    index = _CycleIndex(graph.n, cycles)

    @lru_cache(maxsize=memo_cap)
    def search(remaining: int, need: int) -> Optional[tuple[int, ...]]:
        if need == 0:
            return ()
        if BitUtils.popcount(remaining) < 3 * need:
            return None
        remaining, v, usable = index.branch_vertex(remaining)
        if v < 0:
            return None
        for i in usable:
            rest = search(remaining & ~cycles[i].mask, need - 1)
            if rest is not None:
                return (i,) + rest
        return search(remaining & ~(1 << v), need)

    chosen = search(BitUtils.full(graph.n), k)
    if chosen is None:
        return DisjointCyclesResult(False, None, exact)
    return DisjointCyclesResult(True, CyclePacking(tuple(cycles[i].order for i in chosen)), True)
