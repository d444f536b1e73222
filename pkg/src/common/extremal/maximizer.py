import loguru

from src.common.exceptions import InvalidParameterError, InvariantViolationError
from src.common.extremal.enumeration import enumerate_feasible
from src.common.extremal.record import ExtremalRecord, Witness, audit_witnesses
from src.common.graph.canonical import CanonicalKey, canonical_form
from src.common.graph.graph import Graph
from src.common.spectral.perron import spectral_radius_dense
from src.core.settings import DEFAULT_ENUMERATION_CAP, DEFAULT_SPECTRAL_TIE_TOLERANCE


class _UniqueKeys:
    """访问到的规范键必须两两不同"""

    def __init__(self):
        self.seen: set[CanonicalKey] = set()

    def check(self, graph: Graph) -> CanonicalKey:
        key = canonical_form(graph)
        if key in self.seen:
            raise InvariantViolationError(f"isomorphism class {key.hex} visited twice")
        self.seen.add(key)
        return key


def edge_maximizer(
        n: int,
        k: int,
        cap: int = DEFAULT_ENUMERATION_CAP,
        jobs: int = 1,
        maximal_only: bool = True,
        prune_infeasible: bool = True,
) -> ExtremalRecord:
    """可行图的最大边数以及所有达到最大值的同构类

    边数最多的可行图一定是边极大的, 所以默认只看边极大图
    """
    best = -1
    witnesses: list[Witness] = []
    examined = 0
    unique = _UniqueKeys()

    def visit(graph: Graph, maximal: bool) -> None:
        nonlocal best, examined, witnesses
        if maximal_only and not maximal:
            return
        examined += 1
        key = unique.check(graph)
        edges = graph.edge_count
        if edges > best:
            best, witnesses = edges, []
        if edges == best:
            witnesses.append(Witness(graph, key))

    stats = enumerate_feasible(n, k, visit, cap=cap, jobs=jobs, prune_infeasible=prune_infeasible)
    ordered = tuple(sorted(witnesses, key=lambda w: w.key))
    audit_witnesses(ordered, k)
    loguru.logger.info(f"edge_maximizer(n={n}, k={k}): 最大边数 {best}, {len(ordered)} 个极值图")
    return ExtremalRecord("edges", n, k, "exhaustive", best, ordered, examined, True, stats.to_dict())


def spectral_maximizer(
        n: int,
        k: int,
        cap: int = DEFAULT_ENUMERATION_CAP,
        jobs: int = 1,
        tie_tolerance: float = DEFAULT_SPECTRAL_TIE_TOLERANCE,
        maximal_only: bool = True,
        prune_infeasible: bool = True,
) -> ExtremalRecord:
    """可行图的最大谱半径, 与最大值相对误差不超过 tie_tolerance 的图都作为见证

    加边不会使 rho 变小, 所以默认只对边极大图计算 rho
    """
    if tie_tolerance < 0:
        raise InvalidParameterError(f"tie tolerance must be non-negative, got {tie_tolerance}")
    best = -1.0
    candidates: list[tuple[float, Witness]] = []
    examined = 0
    unique = _UniqueKeys()

    def within(rho: float, top: float) -> bool:
        return rho >= top - tie_tolerance * max(1.0, abs(top))

    def visit(graph: Graph, maximal: bool) -> None:
        nonlocal best, examined, candidates
        if maximal_only and not maximal:
            return
        examined += 1
        key = unique.check(graph)
        rho = spectral_radius_dense(graph)
        if rho > best:
            best = rho
            candidates = [(value, witness) for value, witness in candidates if within(value, best)]
        if within(rho, best):
            candidates.append((rho, Witness(graph, key)))

    stats = enumerate_feasible(n, k, visit, cap=cap, jobs=jobs, prune_infeasible=prune_infeasible)
    ordered = tuple(sorted((w for value, w in candidates if within(value, best)), key=lambda w: w.key))
    audit_witnesses(ordered, k)
    loguru.logger.info(f"spectral_maximizer(n={n}, k={k}): 最大 rho {best:.12f}, {len(ordered)} 个极值图")
    return ExtremalRecord("spectral-radius", n, k, "exhaustive", best, ordered, examined, True, stats.to_dict())

