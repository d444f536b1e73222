"""graph6 编解码

编解码交给 networkx, 这里只负责在解码之前校验输入, 出错时给出字节偏移
"""
import networkx as nx
from networkx.readwrite.graph6 import data_to_n

from src.common.exceptions import Graph6ParseError
from src.common.graph.graph import Graph

GRAPH6_HEADER: str = ">>graph6<<"
_BIAS: int = 63


def write_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").rstrip("\n")


def _validate(data: bytes) -> None:
    """字节范围, 长度与填充位; networkx 对这些错误不报告位置"""
    if not data:
        raise Graph6ParseError("empty graph6 string", 0)
    for offset, value in enumerate(data):
        if not _BIAS <= value <= 126:
            raise Graph6ParseError(f"byte {value!r} outside the graph6 range 63..126", offset)
    values = [value - _BIAS for value in data]
    try:
        n, rest = data_to_n(values)
    except IndexError as e:
        raise Graph6ParseError("truncated graph6 size field", len(data)) from e
    if n < 1:
        raise Graph6ParseError("graph6 encodes a graph without vertices", 0)
    start = len(values) - len(rest)
    pair_count = n * (n - 1) // 2
    expected = start + (pair_count + 5) // 6
    if len(data) != expected:
        raise Graph6ParseError(f"expected {expected} bytes for n={n}, got {len(data)}", min(len(data), expected))
    if pair_count % 6 and values[-1] & ((1 << (6 - pair_count % 6)) - 1):
        raise Graph6ParseError("non-zero padding bits", len(data) - 1)


def parse_graph6(text: str) -> Graph:
    stripped = text.strip()
    if stripped.startswith(GRAPH6_HEADER):
        stripped = stripped[len(GRAPH6_HEADER):]
    if stripped[:1] in (":", ";", "&"):
        raise Graph6ParseError("sparse6/digraph6 input is not graph6", 0)
    try:
        data = stripped.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6ParseError("non-ASCII character in graph6 input", e.start) from e
    _validate(data)
    return Graph.from_networkx(nx.from_graph6_bytes(data))
