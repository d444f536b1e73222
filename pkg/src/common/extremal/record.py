from dataclasses import dataclass, field
from typing import Optional, Union

from src.common.cycle_packing.packing import has_k_disjoint_cycles
from src.common.exceptions import InvalidParameterError, InvariantViolationError
from src.common.graph.canonical import CanonicalKey, canonical_form
from src.common.graph.graph import Graph
from src.common.graph.graph6 import write_graph6
from src.core.settings import (
    CANONICAL_FORM_HARD_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_LOCAL_SEARCH_BUDGET,
    DEFAULT_SPECTRAL_TIE_TOLERANCE,
    MODES,
    OBJECTIVES,
)


@dataclass(frozen=True)
class Witness:
    graph: Graph
    key: Optional[CanonicalKey] = None  # n 超过规范形上限时为 None

    @classmethod
    def of(cls, graph: Graph) -> "Witness":
        if graph.n > CANONICAL_FORM_HARD_CAP:
            return cls(graph)
        key = canonical_form(graph)
        return cls(key.to_graph(), key)

    @property
    def graph6(self) -> str:
        return write_graph6(self.graph)

    def to_dict(self) -> dict:
        return {"key": self.key.hex if self.key is not None else None, "graph6": self.graph6}


@dataclass(frozen=True)
class ExtremalRecord:
    objective: str
    n: int
    k: int
    mode: str
    optimum: Union[int, float]
    witnesses: tuple[Witness, ...]
    graphs_examined: int
    exact: bool
    stats: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "mode": self.mode,
            "n": self.n,
            "k": self.k,
            "optimum": self.optimum,
            "witnesses": [witness.to_dict() for witness in self.witnesses],
            "graphs_examined": self.graphs_examined,
            "exact": self.exact,
            "stats": self.stats,
        }


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    objective: str = "edges"
    mode: str = "exhaustive"
    seed: int = 0
    cap: int = DEFAULT_ENUMERATION_CAP
    jobs: int = 1
    budget: int = DEFAULT_LOCAL_SEARCH_BUDGET
    restarts: int = 1
    tie_tolerance: float = DEFAULT_SPECTRAL_TIE_TOLERANCE
    start: Optional[Graph] = None

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise InvalidParameterError(f"n and k must be positive, got n={self.n}, k={self.k}")
        if self.objective not in OBJECTIVES:
            raise InvalidParameterError(f"objective must be one of {list(OBJECTIVES)}, got {self.objective!r}")
        if self.mode not in MODES:
            raise InvalidParameterError(f"mode must be one of {list(MODES)}, got {self.mode!r}")
        if self.mode == "local-search" and self.objective != "spectral-radius":
            raise InvalidParameterError("local search only maximizes the spectral radius")
        if self.start is not None and self.start.n != self.n:
            raise InvalidParameterError(f"start graph has {self.start.n} vertices, expected {self.n}")
        if self.jobs < 1 or self.budget < 0 or self.restarts < 1:
            raise InvalidParameterError("jobs and restarts must be positive and budget non-negative")


def audit_witnesses(witnesses: tuple[Witness, ...], k: int) -> None:
    """搜索结束后独立复查每个见证图确实不含 k 个不交圈"""
    for witness in witnesses:
        result = has_k_disjoint_cycles(witness.graph, k)
        if result.found:
            raise InvariantViolationError(
                f"witness {witness.graph6} contains {k} disjoint cycles: {result.witness.to_list()}"
            )

