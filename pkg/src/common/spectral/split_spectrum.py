"""完全分裂图 S_{n,2k-1} 的闭式谱量

S_{n,2k-1} 按 团 / 独立集 构成等价二划分, 商矩阵
    [[2k-2, n-2k+1],
     [2k-1, 0     ]]
的最大特征值就是 rho, 对应特征向量给出两值的 Perron 向量
"""
import math
from dataclasses import dataclass

from src.common.exceptions import InvalidParameterError


@dataclass(frozen=True)
class SplitSpectrum:
    n: int
    k: int
    rho: float
    a: float  # 团顶点的分量
    b: float  # 独立集顶点的分量

    @property
    def ratio(self) -> float:
        return self.b / self.a

    def eigen_residuals(self) -> tuple[float, float]:
        """两个特征方程的相对误差"""
        clique_side = (2 * self.k - 2) * self.a + (self.n - 2 * self.k + 1) * self.b
        independent_side = (2 * self.k - 1) * self.a
        return (
            abs(self.rho * self.a - clique_side) / max(abs(clique_side), 1.0),
            abs(self.rho * self.b - independent_side) / max(abs(independent_side), 1.0),
        )


def _check_split(n: int, k: int) -> None:
    if k < 1 or n <= 2 * k - 1:
        raise InvalidParameterError(f"S_(n,2k-1) needs k >= 1 and n > 2k-1, got n={n}, k={k}")


def closed_form_split_rho(n: int, k: int) -> float:
    _check_split(n, k)
    return (k - 1) + math.sqrt((k - 1) ** 2 + (2 * k - 1) * (n - 2 * k + 1))


def split_perron_profile(n: int, k: int) -> SplitSpectrum:
    rho = closed_form_split_rho(n, k)
    return SplitSpectrum(n, k, rho, 1.0, (2 * k - 1) / rho)


def erdos_posa_edge_bound(n: int, k: int) -> int:
    """f(n,k) = (2k-1)(n-k), 同时也是 e(S_{n,2k-1})"""
    return (2 * k - 1) * (n - k)


def split_lower_bound_holds(n: int, k: int) -> bool:
    """rho(S_{n,2k-1}) >= sqrt((2k-1)n) 的精确整数判定

    两边平方整理后等价于 4(k-1)^2 n >= (2k-1)^3
    """
    _check_split(n, k)
    return 4 * (k - 1) ** 2 * n >= (2 * k - 1) ** 3
