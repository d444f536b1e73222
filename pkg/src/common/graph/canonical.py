"""同构判定用的规范形

规范键 = 所有顶点置换下邻接上三角位串(graph6 顺序)的字典序最小值.
搜索只在有序等价划分(度数 + 邻域细化)允许的置换中进行, 并跳过孪生顶点:
交换两个孪生顶点是自同构, 对应的子树给出同一个位串
"""
from typing import NamedTuple

from src.common.exceptions import UnsupportedSizeError
from src.common.graph.graph import Graph
from src.core.settings import CANONICAL_FORM_HARD_CAP
from src.utils.bit_utils import BitUtils


class CanonicalKey(NamedTuple):
    n: int
    bits: int

    @property
    def hex(self) -> str:
        width = max(1, (self.n * (self.n - 1) // 2 + 3) // 4)
        return f"{self.n:x}:{self.bits:0{width}x}"

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalKey":
        n_text, bits_text = text.split(":")
        return cls(int(n_text, 16), int(bits_text, 16))

    def to_graph(self) -> Graph:
        """按规范编号还原出的图"""
        rows = [0] * self.n
        position = self.n * (self.n - 1) // 2
        for j in range(1, self.n):
            for i in range(j):
                position -= 1
                if self.bits >> position & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(self.n, tuple(rows))


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """按"到各个单元的邻居数"反复拆分单元, 直到稳定"""
    while True:
        masks = [BitUtils.from_indices(cell) for cell in cells]
        refined: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple(BitUtils.popcount(rows[v] & mask) for mask in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                changed = True
            refined.extend(groups[signature] for signature in sorted(groups))
        cells = refined
        if not changed:
            return cells


def _leaf_bits(rows: tuple[int, ...], order: list[int]) -> int:
    bits = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            bits = (bits << 1) | (row >> order[i] & 1)
    return bits


def canonical_labeling(graph: Graph) -> tuple[CanonicalKey, list[int]]:
    """返回规范键以及对应的顶点顺序 order(order[新编号] = 原编号)"""
    if graph.n > CANONICAL_FORM_HARD_CAP:
        raise UnsupportedSizeError(
            f"canonical_form supports n <= {CANONICAL_FORM_HARD_CAP}, got n={graph.n}"
        )
    rows = graph.rows
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        target = next((t for t, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            bits = _leaf_bits(rows, order)
            if best[0] is None or bits < best[0]:
                best[0], best[1] = bits, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(graph.is_twin(u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(graph.n))])
    return CanonicalKey(graph.n, best[0]), best[1]


def canonical_form(graph: Graph) -> CanonicalKey:
    return canonical_labeling(graph)[0]


def canonical_graph(graph: Graph) -> Graph:
    return canonical_form(graph).to_graph()
