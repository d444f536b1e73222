import loguru

from src.common.exceptions import UnsupportedSizeError
from src.common.graph.graph import Graph, make_complete_split
from src.common.graph.graph6 import parse_graph6
from src.common.spectral.perron import PerronResult, spectral_radius, spectral_radius_dense
from src.common.spectral.split_spectrum import closed_form_split_rho, split_lower_bound_holds
from src.config import cfg


class RhoModel:
    def __init__(self):
        self.tolerance: float = cfg.get(cfg.tolerance)
        self.max_iterations: int = cfg.get(cfg.max_iterations)
        self.dense_limit: int = cfg.get(cfg.dense_limit)

    def _perron_payload(self, graph: Graph, perron: PerronResult) -> dict:
        return {
            "n": graph.n,
            "edges": graph.edge_count,
            "rho": perron.rho,
            "residual": perron.residual,
            "iterations": perron.iterations,
            "converged": perron.converged,
            "u_star": perron.u_star,
            "component": perron.component.to_list(),
        }

    def _dense_payload(self, graph: Graph, rho: float) -> dict:
        dense = spectral_radius_dense(graph)
        return {"dense_rho": dense, "dense_delta": abs(dense - rho)}

    def rho_of_graph6(self, text: str, dense_check: bool = False) -> dict:
        graph = parse_graph6(text)
        perron = spectral_radius(graph, self.tolerance, self.max_iterations)
        result = self._perron_payload(graph, perron)
        if dense_check:
            result.update(self._dense_payload(graph, perron.rho))
        return result

    def rho_of_split(self, n: int, k: int, dense_check: bool = False) -> dict:
        """显式构造 S_{n,2k-1} 做幂迭代, 并与闭式比较"""
        closed_form = closed_form_split_rho(n, k)
        if n > self.dense_limit:
            raise UnsupportedSizeError(
                f"explicit S_(n,2k-1) is limited to n <= {self.dense_limit}, got n={n}; "
                f"closed form rho = {closed_form!r}"
            )
        graph = make_complete_split(n, 2 * k - 1)
        perron = spectral_radius(graph, self.tolerance, self.max_iterations)
        result = self._perron_payload(graph, perron)
        result["closed_form"] = closed_form
        result["delta"] = abs(perron.rho - closed_form)
        result["lower_bound_holds"] = split_lower_bound_holds(n, k)
        if dense_check:
            result.update(self._dense_payload(graph, perron.rho))
        loguru.logger.debug(f"S_({n},{2 * k - 1}): rho={perron.rho!r}, 闭式={closed_form!r}")
        return result
