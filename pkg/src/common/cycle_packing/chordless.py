from itertools import islice
from typing import NamedTuple, Optional

import loguru
import networkx as nx

from src.common.exceptions import CapExceededError
from src.common.graph.graph import Graph, VertexSet
from src.core.settings import DEFAULT_CHORDLESS_CYCLE_CAP
from src.utils.bit_utils import BitUtils


class ChordlessCycle(NamedTuple):
    vertices: tuple[int, ...]  # 升序
    order: tuple[int, ...]  # 圈上的顺序, 从最小顶点开始
    mask: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self, n: int) -> VertexSet:
        return VertexSet(n, self.mask)

    @classmethod
    def from_order(cls, order: list[int]) -> "ChordlessCycle":
        """把圈旋转到最小顶点开头, 方向取第二个顶点较小的一侧"""
        start = order.index(min(order))
        rotated = order[start:] + order[:start]
        if rotated[1] > rotated[-1]:
            rotated = rotated[:1] + rotated[:0:-1]
        return cls(tuple(sorted(rotated)), tuple(rotated), BitUtils.from_indices(rotated))


def enumerate_chordless_cycles(graph: Graph, cap: Optional[int] = DEFAULT_CHORDLESS_CYCLE_CAP) -> list[ChordlessCycle]:
    """枚举所有无弦(诱导)圈, 每个圈只报告一次, 按排序后的顶点元组字典序输出

    Raises:
        CapExceededError: 圈的数量超过 cap, partial 中是已找到的圈(已排序)
    """
    cycles = nx.chordless_cycles(graph.to_networkx())
    if cap is not None:
        cycles = islice(cycles, cap + 1)
    found = sorted(ChordlessCycle.from_order(list(cycle)) for cycle in cycles)
    if cap is not None and len(found) > cap:
        loguru.logger.warning(f"无弦圈数量超过上限 {cap}, 停止枚举")
        raise CapExceededError(f"chordless cycle count exceeds cap {cap}", partial=found[:cap])
    loguru.logger.debug(f"n={graph.n} 的图共有 {len(found)} 个无弦圈")
    return found
