from typing import Optional

from src.common.cycle_packing.packing import has_k_disjoint_cycles, max_cycle_packing
from src.common.exceptions import CapExceededError
from src.common.graph.graph6 import parse_graph6
from src.config import cfg


class PackModel:
    def __init__(self):
        self.cycle_cap: int = cfg.get(cfg.chordless_cycle_cap)
        self.memo_cap: int = cfg.get(cfg.memo_cap)

    def pack(self, text: str, k: Optional[int] = None) -> dict:
        """nu(G) 与见证; 给出 k 时再判定是否有 k 个不交圈

        无弦圈超过上限时抛出 CapExceededError, partial 中是下界结果
        """
        graph = parse_graph6(text)
        packing = max_cycle_packing(graph, self.cycle_cap, self.memo_cap)
        result = {
            "n": graph.n,
            "edges": graph.edge_count,
            "nu": packing.nu,
            "witness": packing.witness.to_list(),
            "exact": packing.exact,
        }
        exact = packing.exact
        if k is not None:
            disjoint = has_k_disjoint_cycles(graph, k, self.cycle_cap, self.memo_cap)
            result["k"] = k
            result["has_k_disjoint_cycles"] = disjoint.found
            result["k_witness"] = disjoint.witness.to_list() if disjoint.witness is not None else None
            result["k_exact"] = disjoint.exact
            exact = exact and disjoint.exact
        if not exact:
            raise CapExceededError(f"chordless cycle cap {self.cycle_cap} reached; nu is a lower bound", partial=result)
        return result
