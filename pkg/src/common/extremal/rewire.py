from src.common.exceptions import InvalidParameterError
from src.common.graph.graph import Graph, VertexSet
from src.utils.bit_utils import BitUtils


def claim3_rewire(graph: Graph, v3: int, v4: int, hub: VertexSet) -> Graph:
    """G - v3v4 + {v3v : v ∈ hub, v 不与 v3 相邻}

    hub 中的 v3 自身被跳过; v4 不在 hub 中时结果满足 N(v3) ⊇ hub - {v3}
    """
    if not graph.has_edge(v3, v4):
        raise InvalidParameterError(f"({v3}, {v4}) is not an edge")
    if not len(hub):
        raise InvalidParameterError("hub must be nonempty")
    if hub.n != graph.n:
        raise InvalidParameterError(f"hub is over {hub.n} vertices, graph has {graph.n}")
    rows = list(graph.rows)
    rows[v3] &= ~(1 << v4)
    rows[v4] &= ~(1 << v3)
    added = hub.members & ~graph.rows[v3] & ~(1 << v3)
    rows[v3] |= added
    for v in BitUtils.iter_bits(added):
        rows[v] |= 1 << v3
    return Graph(graph.n, tuple(rows))
