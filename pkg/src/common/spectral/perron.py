from dataclasses import dataclass
from typing import Optional

import loguru
import numpy as np
import scipy.sparse as sps

from src.common.exceptions import InvalidParameterError
from src.common.graph.graph import Graph, VertexSet
from src.core.settings import COMPONENT_TIE_TOLERANCE, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE
from src.utils.bit_utils import BitUtils


@dataclass(frozen=True)
class PerronResult:
    rho: float
    x: np.ndarray  # 单位非负向量, 在实现 rho 的分量之外为 0
    residual: float  # ||A x - rho x||_inf
    iterations: int
    component: VertexSet
    converged: bool

    @property
    def u_star(self) -> int:
        """Perron 分量最大的顶点, 平局取最小编号"""
        return int(np.argmax(self.x))

    def ratios(self) -> np.ndarray:
        return self.x / self.x[self.u_star]


@dataclass(frozen=True)
class _ComponentEstimate:
    component: VertexSet
    rho: float
    vector: np.ndarray
    residual: float
    iterations: int
    converged: bool


def adjacency_matrix(graph: Graph, vertices: Optional[list[int]] = None) -> sps.csr_matrix:
    """诱导子图的稀疏邻接矩阵, 行列按 vertices 的顺序"""
    if vertices is None:
        vertices = list(range(graph.n))
    index = {v: i for i, v in enumerate(vertices)}
    mask = BitUtils.from_indices(vertices)
    rows, cols = [], []
    for v in vertices:
        for u in BitUtils.iter_bits(graph.rows[v] & mask):
            rows.append(index[v])
            cols.append(index[u])
    data = np.ones(len(rows), dtype=np.float64)
    return sps.csr_matrix((data, (rows, cols)), shape=(len(vertices), len(vertices)))


@dataclass(frozen=True)
class _TwinQuotient:
    """连通分量按孪生类压缩后的对称商矩阵

    同一类中的顶点两两孪生, Perron 向量在类上取常值. matrix = D^(1/2) B D^(-1/2),
    B[i][j] 是类 i 中一个顶点在类 j 中的邻居数, D = diag(sizes)
    """
    class_of: np.ndarray  # 分量内第 i 个顶点所在的类
    sizes: np.ndarray
    matrix: sps.csr_matrix

    def expand(self, z: np.ndarray) -> np.ndarray:
        """商空间的单位向量还原为分量上的单位向量"""
        return z[self.class_of] / np.sqrt(self.sizes[self.class_of])


def _twin_quotient(graph: Graph, vertices: list[int]) -> _TwinQuotient:
    mask = BitUtils.from_indices(vertices)
    closed: dict[int, list[int]] = {}
    for v in vertices:
        closed.setdefault(graph.rows[v] & mask | 1 << v, []).append(v)
    # 真孪生(闭邻域相同)的顶点不可能再有假孪生
    groups = [members for members in closed.values() if len(members) > 1]
    in_clique = {v for members in groups for v in members}
    opened: dict[int, list[int]] = {}
    for v in vertices:
        if v not in in_clique:
            opened.setdefault(graph.rows[v] & mask, []).append(v)
    groups.extend(opened.values())
    groups.sort(key=lambda members: members[0])

    index = {v: i for i, v in enumerate(vertices)}
    class_of = np.empty(len(vertices), dtype=np.int64)
    for c, members in enumerate(groups):
        class_of[[index[v] for v in members]] = c
    sizes = np.array([len(members) for members in groups], dtype=np.float64)

    rows, cols, data = [], [], []
    for c, members in enumerate(groups):
        counts: dict[int, int] = {}
        for u in BitUtils.iter_bits(graph.rows[members[0]] & mask):
            target = int(class_of[index[u]])
            counts[target] = counts.get(target, 0) + 1
        for target, count in counts.items():
            rows.append(c)
            cols.append(target)
            data.append(count * np.sqrt(sizes[c] / sizes[target]))
    matrix = sps.csr_matrix((data, (rows, cols)), shape=(len(groups), len(groups)))
    return _TwinQuotient(class_of, sizes, matrix)


def _power_iteration(quotient: _TwinQuotient, tol: float, max_iterations: int) -> tuple[float, np.ndarray, float, int, bool]:
    """在孪生商上对 A + I 做幂迭代, 从分量上的均匀向量开始

    平移 I 之后非平凡连通分量的矩阵是本原的, 二部图不会出现周期 2 振荡
    残差按顶点计算: 类 c 中顶点的 (A x - rho x)_v = r_c / sqrt(sizes[c])
    收敛条件: Rayleigh 商的变化 <= tol 且 残差 <= max(tol * max(1, rho), 舍入下限)
    舍入下限 = 行宽 * eps * ||(A + I) x||_inf, 是 float64 下计算 (A + I) x 本身的误差量级
    """
    size = quotient.matrix.shape[0]
    shifted = (quotient.matrix + sps.identity(size, format="csr")).tocsr()
    width = int(np.max(np.diff(shifted.indptr)))
    scale = np.sqrt(quotient.sizes)
    z = scale / np.linalg.norm(scale)
    previous = np.inf
    best: tuple[float, np.ndarray, float] = (0.0, z, np.inf)
    for iteration in range(1, max_iterations + 1):
        y = shifted @ z
        rayleigh = float(z @ y)
        residual = float(np.max(np.abs(y - rayleigh * z) / scale))
        rho = rayleigh - 1.0
        floor = width * np.finfo(np.float64).eps * float(np.max(np.abs(y) / scale))
        if residual < best[2]:
            best = (rho, z, residual)
        if abs(rayleigh - previous) <= tol and residual <= max(tol * max(1.0, rho), floor):
            return rho, quotient.expand(z), residual, iteration, True
        previous = rayleigh
        z = y / np.linalg.norm(y)
    loguru.logger.warning(f"幂迭代达到上限 {max_iterations} 次仍未收敛, 最好残差 {best[2]:.3e}")
    return best[0], quotient.expand(best[1]), best[2], max_iterations, False


def spectral_radius(graph: Graph, tol: float = DEFAULT_TOLERANCE, max_iterations: int = DEFAULT_MAX_ITERATIONS) -> PerronResult:
    """谱半径与 Perron 向量, 逐连通分量做幂迭代后取最大者

    - 孤立顶点的分量 rho 为 0
    - 多个分量的 rho 相差不超过 1e-12 时取包含最小编号顶点的分量
    - 整个图没有边时 rho = 0, 向量取全体顶点上的均匀向量
    """
    if tol <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tol}")
    if graph.edge_count == 0:
        x = np.full(graph.n, 1.0 / np.sqrt(graph.n))
        x.setflags(write=False)
        return PerronResult(0.0, x, 0.0, 0, graph.all_vertices(), True)

    estimates: list[_ComponentEstimate] = []
    for component in graph.connected_components():
        vertices = component.to_list()
        if len(vertices) == 1:
            estimates.append(_ComponentEstimate(component, 0.0, np.ones(1), 0.0, 0, True))
            continue
        rho, vector, residual, iterations, converged = _power_iteration(
            _twin_quotient(graph, vertices), tol, max_iterations
        )
        estimates.append(_ComponentEstimate(component, rho, vector, residual, iterations, converged))

    top = max(estimate.rho for estimate in estimates)
    chosen = next(estimate for estimate in estimates if estimate.rho >= top - COMPONENT_TIE_TOLERANCE)
    x = np.zeros(graph.n)
    x[chosen.component.to_list()] = np.abs(chosen.vector) / np.linalg.norm(chosen.vector)
    x.setflags(write=False)
    converged = all(estimate.converged for estimate in estimates)
    loguru.logger.debug(
        f"rho={chosen.rho:.12f}, 残差={chosen.residual:.3e}, 迭代 {chosen.iterations} 次, "
        f"{len(estimates)} 个连通分量"
    )
    return PerronResult(chosen.rho, x, chosen.residual, chosen.iterations, chosen.component, converged)


def spectral_radius_dense(graph: Graph) -> float:
    """用稠密对称特征值分解交叉验证"""
    matrix = adjacency_matrix(graph).toarray()
    return float(np.linalg.eigvalsh(matrix)[-1])
