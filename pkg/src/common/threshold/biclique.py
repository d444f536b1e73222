from dataclasses import dataclass
from typing import Optional

import loguru

from src.common.exceptions import InvalidParameterError
from src.common.graph.graph import Graph
from src.common.threshold.thresholds import ThresholdSets
from src.utils.bit_utils import BitUtils


@dataclass(frozen=True)
class BicliqueWitness:
    """left 是 R'' 中的 2k 个顶点, right 是它们的 2k 个公共邻居"""
    found: bool
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.found

    def to_dict(self) -> dict:
        return {"found": self.found, "left": list(self.left), "right": list(self.right)}


def check_common_neighborhood_kkk(t: ThresholdSets, graph: Optional[Graph], k: int) -> BicliqueWitness:
    """是否有 R'' 中的 2k 个顶点拥有至少 2k 个公共邻居(即 G 含 K_{2k,2k})

    在类结构上搜索: 从每个 R'' 类中取若干顶点, 类 j 中与所有已取顶点都相邻的顶点数为
    sizes[j] - counts[j] (j 属于所有已取类的覆盖集合时), 覆盖集合是 adj[i] 再加上团类 i 自身
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    structure = t.structure
    if graph is not None and graph.n != structure.n:
        raise InvalidParameterError("threshold sets were computed on a different graph")
    need = 2 * k
    classes = list(BitUtils.iter_bits(t.masks["R_dprime"]))
    counts = [0] * structure.class_count
    result: dict[str, int] = {}

    def common_size(mask: int) -> int:
        return sum(structure.sizes[j] - counts[j] for j in BitUtils.iter_bits(mask))

    def search(position: int, chosen: int, common: int) -> bool:
        if chosen == need:
            if common_size(common) >= need:
                result["common"] = common
                return True
            return False
        if position == len(classes):
            return False
        i = classes[position]
        cover = structure.adj[i] | (1 << i if structure.internal[i] else 0)
        narrowed = common & cover
        for take in range(min(structure.sizes[i], need - chosen), 0, -1):
            counts[i] = take
            if common_size(narrowed) >= need and search(position + 1, chosen + take, narrowed):
                return True
        counts[i] = 0
        return search(position + 1, chosen, common)

    if not search(0, 0, structure.all_classes()):
        loguru.logger.debug(f"R'' 中没有 {need} 个顶点拥有 {need} 个公共邻居")
        return BicliqueWitness(False)

    left: list[int] = []
    for i in classes:
        left.extend(range(structure.offsets[i], structure.offsets[i] + counts[i]))
    right: list[int] = []
    for j in BitUtils.iter_bits(result["common"]):
        start = structure.offsets[j] + counts[j]
        right.extend(range(start, min(start + need - len(right), structure.offsets[j] + structure.sizes[j])))
        if len(right) == need:
            break
    loguru.logger.debug(f"找到 K_({need},{need}): left={left}, right={right}")
    return BicliqueWitness(True, tuple(left), tuple(right))
