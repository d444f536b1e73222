from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterator

from src.common.exceptions import InvalidParameterError, UnsupportedSizeError
from src.common.graph.graph import Graph, VertexSet
from src.core.settings import EXPAND_LIMIT
from src.utils.bit_utils import BitUtils


@dataclass(frozen=True)
class ClassGraph:
    """孪生类商图

    每个类是一组两两孪生的顶点: internal 为 True 时类内构成团, 否则是独立集;
    两个类之间要么完全连接要么没有边, adj[i] 是类 i 的相邻类位集合(不含自身).
    类 i 的顶点编号是 offsets[i] .. offsets[i] + sizes[i] - 1.
    显式图对应"每个顶点一个类", 完全分裂图只需要两个类, n 可以非常大
    """
    sizes: tuple[int, ...]
    internal: tuple[bool, ...]
    adj: tuple[int, ...]
    labels: tuple[str, ...]
    offsets: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        count = len(self.sizes)
        if not (len(self.internal) == len(self.adj) == len(self.labels) == count):
            raise InvalidParameterError("class graph fields must have the same length")
        for i, mask in enumerate(self.adj):
            if self.sizes[i] < 1:
                raise InvalidParameterError(f"class {i} is empty")
            if mask >> i & 1 or mask >> count:
                raise InvalidParameterError(f"class {i} has an invalid adjacency mask")
            for j in BitUtils.iter_bits(mask):
                if not self.adj[j] >> i & 1:
                    raise InvalidParameterError(f"asymmetric class adjacency between {i} and {j}")
        object.__setattr__(self, "offsets", (0,) + tuple(accumulate(self.sizes))[:-1])

    # ==========================
    # 构造
    # ==========================

    @classmethod
    def from_graph(cls, graph: Graph) -> "ClassGraph":
        return cls(
            sizes=(1,) * graph.n,
            internal=(False,) * graph.n,
            adj=graph.rows,
            labels=tuple(str(v) for v in range(graph.n)),
        )

    @classmethod
    def complete_split(cls, n: int, c: int) -> "ClassGraph":
        if not 1 <= c < n:
            raise InvalidParameterError(f"complete split graph needs 1 <= c < n, got n={n}, c={c}")
        return cls(sizes=(c, n - c), internal=(True, False), adj=(0b10, 0b01), labels=("clique", "independent"))

    # ==========================
    # 计数
    # ==========================

    @property
    def class_count(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def is_explicit(self) -> bool:
        """每个类只有一个顶点"""
        return all(size == 1 for size in self.sizes)

    def all_classes(self) -> int:
        return BitUtils.full(self.class_count)

    def weight(self, mask: int) -> int:
        """位集合中各类的顶点总数"""
        if self.is_explicit:
            return BitUtils.popcount(mask)
        return sum(self.sizes[i] for i in BitUtils.iter_bits(mask))

    def degree(self, i: int) -> int:
        """类 i 中任一顶点的度"""
        return (self.sizes[i] - 1 if self.internal[i] else 0) + self.weight(self.adj[i])

    def degree_within(self, i: int, mask: int) -> int:
        """类 i 中的顶点在 mask 诱导子图中的度(要求 i 在 mask 中)"""
        return (self.sizes[i] - 1 if self.internal[i] else 0) + self.weight(self.adj[i] & mask)

    def edges_within(self, mask: int) -> int:
        total = 0
        for i in BitUtils.iter_bits(mask):
            if self.internal[i]:
                total += self.sizes[i] * (self.sizes[i] - 1) // 2
            later = self.adj[i] & mask & ~((1 << (i + 1)) - 1)
            total += self.sizes[i] * self.weight(later)
        return total

    def is_clique(self, mask: int) -> bool:
        for i in BitUtils.iter_bits(mask):
            if self.sizes[i] > 1 and not self.internal[i]:
                return False
            if mask & ~(1 << i) & ~self.adj[i]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        for i in BitUtils.iter_bits(mask):
            if self.sizes[i] > 1 and self.internal[i]:
                return False
            if self.adj[i] & mask:
                return False
        return True

    # ==========================
    # 顶点层面
    # ==========================

    def class_of(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} out of range 0..{self.n - 1}")
        return bisect_right(self.offsets, v) - 1

    def vertices_of(self, mask: int, limit: int | None = None) -> Iterator[int]:
        """mask 中各类的顶点编号, 可以只取前 limit 个"""
        produced = 0
        for i in BitUtils.iter_bits(mask):
            for v in range(self.offsets[i], self.offsets[i] + self.sizes[i]):
                if limit is not None and produced >= limit:
                    return
                produced += 1
                yield v

    def vertex_set(self, mask: int) -> VertexSet:
        if self.n > EXPAND_LIMIT:
            raise UnsupportedSizeError(f"cannot materialize vertex sets for n={self.n} > {EXPAND_LIMIT}")
        if self.is_explicit:
            return VertexSet(self.n, mask)
        return VertexSet.of(self.n, self.vertices_of(mask))

    def expand(self) -> Graph:
        """展开成显式图"""
        if self.is_explicit:
            return Graph(self.n, self.adj)
        if self.n > EXPAND_LIMIT:
            raise UnsupportedSizeError(f"cannot expand a class graph with n={self.n} > {EXPAND_LIMIT}")
        class_masks = [BitUtils.from_indices(self.vertices_of(1 << i)) for i in range(self.class_count)]
        rows = []
        for i in range(self.class_count):
            row = 0
            for j in BitUtils.iter_bits(self.adj[i]):
                row |= class_masks[j]
            for v in self.vertices_of(1 << i):
                own = class_masks[i] & ~(1 << v) if self.internal[i] else 0
                rows.append(row | own)
        return Graph(self.n, tuple(rows))
