from src.common.extremal.local_search import local_search
from src.common.extremal.maximizer import edge_maximizer, spectral_maximizer
from src.common.extremal.record import ExtremalRecord, SearchSpec
from src.common.graph.graph import make_path


def run_search(spec: SearchSpec) -> ExtremalRecord:
    """按 SearchSpec 分派到穷举或 local search, local search 默认从路 P_n 出发"""
    if spec.mode == "local-search":
        start = spec.start if spec.start is not None else make_path(spec.n)
        return local_search(start, spec.k, spec.budget, restarts=spec.restarts, seed=spec.seed)
    if spec.objective == "edges":
        return edge_maximizer(spec.n, spec.k, cap=spec.cap, jobs=spec.jobs)
    return spectral_maximizer(spec.n, spec.k, cap=spec.cap, jobs=spec.jobs, tie_tolerance=spec.tie_tolerance)
