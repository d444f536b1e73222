from typing import Iterable, Iterator


class BitUtils:
    """以 Python int 作为位集合的工具方法

    int 没有长度上限, n <= 64 时一行就是一个机器字, 更大的 n 自动退化为多字块
    """

    @staticmethod
    def iter_bits(mask: int) -> Iterator[int]:
        """从低到高依次返回置位的下标"""
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    @staticmethod
    def popcount(mask: int) -> int:
        return mask.bit_count()

    @staticmethod
    def from_indices(indices: Iterable[int]) -> int:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return mask

    @staticmethod
    def full(n: int) -> int:
        return (1 << n) - 1
