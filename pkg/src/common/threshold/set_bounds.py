from typing import AbstractSet, Hashable, Sequence

from src.common.exceptions import InvalidParameterError


def set_intersection_bound(sets: Sequence[AbstractSet[Hashable]]) -> tuple[int, int]:
    """返回 (|S_1 ∩ ... ∩ S_k|, Σ|S_i| - (k-1)|S_1 ∪ ... ∪ S_k|), 调用方断言前者不小于后者

    每个不在交集中的元素至少在一个 S_i 之外, 所以 Σ|S_i| 至多比 k|∪| 少 |∪| - |∩|
    """
    if not sets:
        raise InvalidParameterError("at least one set is required")
    k = len(sets)
    frozen = [frozenset(s) for s in sets]
    intersection = frozenset.intersection(*frozen)
    union = frozenset.union(*frozen)
    return len(intersection), sum(len(s) for s in frozen) - (k - 1) * len(union)
