from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from src.common.exceptions import InvalidParameterError
from src.utils.bit_utils import BitUtils


@dataclass(frozen=True, slots=True)
class VertexSet:
    """顶点子集, members 是以 int 表示的位集合"""
    n: int
    members: int = 0

    def __post_init__(self):
        if self.members < 0 or self.members >> self.n:
            raise InvalidParameterError(f"vertex set {self.members:#x} exceeds vertex range 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidParameterError(f"vertex {v} out of range 0..{n - 1}")
        return cls(n, BitUtils.from_indices(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, BitUtils.full(n))

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    def __len__(self) -> int:
        return BitUtils.popcount(self.members)

    def __iter__(self) -> Iterator[int]:
        return BitUtils.iter_bits(self.members)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.members >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.members | self._check(other).members)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.members & self._check(other).members)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.members & ~self._check(other).members)

    def issubset(self, other: "VertexSet") -> bool:
        return self.members & ~self._check(other).members == 0

    def to_list(self) -> list[int]:
        return list(self)

    def _check(self, other: "VertexSet") -> "VertexSet":
        if other.n != self.n:
            raise InvalidParameterError(f"vertex sets over different ranges: {self.n} vs {other.n}")
        return other

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True, slots=True)
class Graph:
    """不可变的无向简单图

    rows[v] 是 v 的邻接行(位集合), 构造时校验对称且无自环
    """
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise InvalidParameterError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        for v, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise InvalidParameterError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidParameterError(f"self-loop at vertex {v}")
            for u in BitUtils.iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidParameterError(f"asymmetric adjacency between {v} and {u}")

    # ==========================
    # 构造
    # ==========================

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """顶点按排序后的顺序重新编号为 0..n-1"""
        if graph.is_directed() or graph.is_multigraph():
            raise InvalidParameterError("only simple undirected networkx graphs can be converted")
        index = {v: i for i, v in enumerate(sorted(graph.nodes()))}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in graph.edges()))

    def to_networkx(self) -> nx.Graph:
        result = nx.Graph()
        result.add_nodes_from(range(self.n))
        result.add_edges_from(self.edges())
        return result

    # ==========================
    # 基础查询
    # ==========================

    @property
    def edge_count(self) -> int:
        return sum(BitUtils.popcount(row) for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return BitUtils.popcount(self.rows[self._vertex(v)])

    def degrees(self) -> list[int]:
        return [BitUtils.popcount(row) for row in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[self._vertex(u)] >> self._vertex(v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """按字典序返回所有边 (u, v), u < v"""
        for u, row in enumerate(self.rows):
            for v in BitUtils.iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = BitUtils.full(self.n)
        for u, row in enumerate(self.rows):
            missing = (full & ~row) >> (u + 1)
            for v in BitUtils.iter_bits(missing):
                yield u, u + 1 + v

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def all_vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    # ==========================
    # 邻域与边计数
    # ==========================

    def neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.rows[self._vertex(v)])

    def second_neighborhood(self, v: int) -> VertexSet:
        """与 v 距离恰好为 2 的顶点"""
        first = self.rows[self._vertex(v)]
        reach = 0
        for u in BitUtils.iter_bits(first):
            reach |= self.rows[u]
        return VertexSet(self.n, reach & ~first & ~(1 << v))

    def edge_count_within(self, a: VertexSet) -> int:
        mask = self._set(a).members
        return sum(BitUtils.popcount(self.rows[v] & mask) for v in BitUtils.iter_bits(mask)) // 2

    def edge_count_between(self, a: VertexSet, b: VertexSet) -> int:
        """A 到 B 的边数

        A 与 B 可以相交, A∩B 内部的边计两次,
        这样 e(A,B) = e(A,B\\A) + 2e(A∩B) + e(A\\B, A∩B) 恰好成立
        """
        target = self._set(b).members
        return sum(BitUtils.popcount(self.rows[v] & target) for v in self._set(a))

    # ==========================
    # 派生图
    # ==========================

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidParameterError(f"self-loop at vertex {u}")
        rows = list(self.rows)
        rows[self._vertex(u)] |= 1 << v
        rows[self._vertex(v)] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidParameterError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """perm[old] = new"""
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameterError("relabeling must be a permutation of the vertices")
        rows = [0] * self.n
        for old, row in enumerate(self.rows):
            new_row = 0
            for u in BitUtils.iter_bits(row):
                new_row |= 1 << perm[u]
            rows[perm[old]] = new_row
        return Graph(self.n, tuple(rows))

    def induced_subgraph(self, a: VertexSet) -> tuple["Graph", list[int]]:
        """返回诱导子图以及新编号到原编号的映射(按原编号升序)"""
        vertices = list(self._set(a))
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(BitUtils.from_indices(index[u] for u in BitUtils.iter_bits(self.rows[v] & a.members)))
        return Graph(len(vertices), tuple(rows)), vertices

    def connected_components(self) -> list[VertexSet]:
        """按最小顶点编号排序的连通分量"""
        remaining = BitUtils.full(self.n)
        components = []
        while remaining:
            seed = remaining & -remaining
            reach = seed
            frontier = seed
            while frontier:
                grow = 0
                for u in BitUtils.iter_bits(frontier):
                    grow |= self.rows[u]
                frontier = grow & ~reach
                reach |= frontier
            components.append(VertexSet(self.n, reach))
            remaining &= ~reach
        return components

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.connected_components())

    def is_twin(self, u: int, v: int) -> bool:
        """N(u) - v == N(v) - u, 交换 u, v 是自同构"""
        return self.rows[u] & ~(1 << v) == self.rows[v] & ~(1 << u)

    def twin_representatives(self) -> list[int]:
        """每个顶点所在孪生类中的最小顶点"""
        representatives = list(range(self.n))
        for v in range(self.n):
            for u in range(v):
                if representatives[u] == u and self.is_twin(u, v):
                    representatives[v] = u
                    break
        return representatives

    def _vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidParameterError(f"vertex {v} out of range 0..{self.n - 1}")
        return v

    def _set(self, a: VertexSet) -> VertexSet:
        if a.n != self.n:
            raise InvalidParameterError(f"vertex set over {a.n} vertices used with a graph of order {self.n}")
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def make_complete_split(n: int, c: int) -> Graph:
    """S_{n,c}: 0..c-1 构成团, c..n-1 为独立集, 两部分之间完全连接"""
    if not 1 <= c < n:
        raise InvalidParameterError(f"complete split graph needs 1 <= c < n, got n={n}, c={c}")
    full = BitUtils.full(n)
    clique = BitUtils.full(c)
    rows = tuple((full & ~(1 << v)) if v < c else clique for v in range(n))
    return Graph(n, rows)


def make_complete(n: int) -> Graph:
    full = BitUtils.full(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def make_complete_bipartite(p: int, q: int) -> Graph:
    left = BitUtils.full(p)
    right = BitUtils.full(p + q) & ~left
    return Graph(p + q, tuple(right if v < p else left for v in range(p + q)))


def make_path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_star(n: int) -> Graph:
    return make_complete_split(n, 1)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.n
    rows = first.rows + tuple(row << shift for row in second.rows)
    return Graph(first.n + second.n, rows)


def edge_count_within(graph: Graph, a: VertexSet) -> int:
    return graph.edge_count_within(a)


def edge_count_between(graph: Graph, a: VertexSet, b: VertexSet) -> int:
    return graph.edge_count_between(a, b)


def neighborhood(graph: Graph, v: int) -> VertexSet:
    return graph.neighborhood(v)


def second_neighborhood(graph: Graph, v: int) -> VertexSet:
    return graph.second_neighborhood(v)
