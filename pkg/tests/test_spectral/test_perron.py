import math
import os
import random
import unittest

import numpy as np

from src.common.exceptions import InvalidParameterError
from src.common.graph.graph import (
    Graph,
    disjoint_union,
    make_complete,
    make_complete_split,
    make_cycle,
    make_path,
    make_star,
)
from src.common.spectral.perron import adjacency_matrix, spectral_radius, spectral_radius_dense
from src.common.spectral.split_spectrum import closed_form_split_rho
from src.core.settings import DENSE_LEMMA_LIMIT

RUN_SLOW = os.environ.get("SEL_RUN_SLOW") == "1"


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """随机生成树再加随机边"""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph.from_edges(n, edges)


class TestSpectralRadius(unittest.TestCase):
    def test_edgeless(self):
        result = spectral_radius(Graph.empty(4))
        self.assertEqual(result.rho, 0.0)
        np.testing.assert_allclose(result.x, np.full(4, 0.5))
        self.assertTrue(result.converged)
        self.assertEqual(result.component.to_list(), [0, 1, 2, 3])

    def test_single_vertex(self):
        result = spectral_radius(Graph.empty(1))
        self.assertEqual(result.rho, 0.0)
        self.assertEqual(result.u_star, 0)

    def test_cycles(self):
        for n in range(3, 16):
            result = spectral_radius(make_cycle(n))
            self.assertTrue(result.converged)
            self.assertAlmostEqual(result.rho, 2.0, delta=1e-9)

    def test_split_graph(self):
        result = spectral_radius(make_complete_split(10, 3))
        self.assertAlmostEqual(result.rho, 1 + math.sqrt(22), delta=1e-9)
        self.assertAlmostEqual(result.rho, 5.690415759823430, delta=1e-9)

    def test_star_ratios(self):
        for n in range(3, 30):
            result = spectral_radius(make_star(n))
            self.assertEqual(result.u_star, 0)
            ratios = result.ratios()
            for leaf in range(1, n):
                self.assertAlmostEqual(ratios[leaf], 1 / math.sqrt(n - 1), delta=1e-9)

    def test_vector_invariants(self):
        rng = random.Random(21)
        for _ in range(100):
            graph = random_graph(rng, rng.randint(1, 12), rng.random())
            result = spectral_radius(graph)
            self.assertAlmostEqual(float(np.linalg.norm(result.x)), 1.0, delta=1e-12)
            self.assertTrue(np.all(result.x >= 0))
            outside = [v for v in range(graph.n) if v not in result.component]
            self.assertTrue(np.all(result.x[outside] == 0))

    def test_connected_residual_and_bounds(self):
        rng = random.Random(22)
        for _ in range(200):
            n = rng.randint(2, 9)
            graph = random_connected_graph(rng, n, rng.random())
            result = spectral_radius(graph)
            self.assertTrue(result.converged)
            self.assertLessEqual(result.residual, 1e-10)
            self.assertTrue(np.all(result.x > 0))
            self.assertGreaterEqual(result.rho, 2 * graph.edge_count / n - 1e-10)
            self.assertLessEqual(result.rho, max(graph.degrees()) + 1e-10)

    def test_matches_dense_eigensolver(self):
        rng = random.Random(23)
        for _ in range(100):
            graph = random_graph(rng, rng.randint(1, 14), rng.random())
            self.assertAlmostEqual(spectral_radius(graph).rho, spectral_radius_dense(graph), delta=1e-9)

    def test_relabel_invariance(self):
        rng = random.Random(24)
        for _ in range(100):
            n = rng.randint(1, 10)
            graph = random_graph(rng, n, 0.5)
            perm = list(range(n))
            rng.shuffle(perm)
            self.assertAlmostEqual(spectral_radius(graph).rho, spectral_radius(graph.relabel(perm)).rho, delta=1e-10)

    def test_adding_an_edge_never_decreases_rho(self):
        rng = random.Random(25)
        for _ in range(200):
            graph = random_graph(rng, rng.randint(2, 10), rng.random())
            non_edges = list(graph.non_edges())
            if not non_edges:
                continue
            bigger = graph.add_edge(*rng.choice(non_edges))
            self.assertGreaterEqual(spectral_radius(bigger).rho, spectral_radius(graph).rho - 1e-12)

    def test_component_choice(self):
        # K4 ∪ K3: Perron 向量只在 K4 上非零
        graph = disjoint_union(make_complete(4), make_complete(3)).relabel([3, 4, 5, 6, 0, 1, 2])
        result = spectral_radius(graph)
        self.assertAlmostEqual(result.rho, 3.0, delta=1e-9)
        self.assertEqual(result.component.to_list(), [3, 4, 5, 6])
        self.assertTrue(np.all(result.x[:3] == 0))

    def test_component_tie_takes_lowest_vertex(self):
        graph = disjoint_union(make_cycle(4), make_cycle(4))
        result = spectral_radius(graph)
        self.assertEqual(result.component.to_list(), [0, 1, 2, 3])
        self.assertEqual(result.u_star, 0)

    def test_u_star_tie(self):
        self.assertEqual(spectral_radius(make_cycle(7)).u_star, 0)

    def test_iteration_cap(self):
        result = spectral_radius(make_path(6), max_iterations=1)
        self.assertFalse(result.converged)
        self.assertEqual(result.iterations, 1)

    def test_invalid_tolerance(self):
        with self.assertRaises(InvalidParameterError):
            spectral_radius(make_path(3), tol=0)

    def test_adjacency_matrix(self):
        matrix = adjacency_matrix(make_path(3)).toarray()
        np.testing.assert_array_equal(matrix, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])

    def test_graphs_with_twins(self):
        rng = random.Random(41)
        for _ in range(60):
            base = random_connected_graph(rng, rng.randint(2, 7), 0.4)
            # 每个顶点复制成若干个真孪生或假孪生
            copies = [rng.randint(1, 3) for _ in range(base.n)]
            clique = [rng.random() < 0.5 for _ in range(base.n)]
            owner = [v for v in range(base.n) for _ in range(copies[v])]
            edges = [
                (a, b) for a in range(len(owner)) for b in range(a + 1, len(owner))
                if base.has_edge(owner[a], owner[b]) or (owner[a] == owner[b] and clique[owner[a]])
            ]
            graph = Graph.from_edges(len(owner), edges)
            result = spectral_radius(graph)
            self.assertTrue(result.converged)
            self.assertAlmostEqual(result.rho, spectral_radius_dense(graph), delta=1e-9)
            x = result.x
            self.assertAlmostEqual(float(np.linalg.norm(x)), 1.0, delta=1e-12)
            full_residual = np.max(np.abs(adjacency_matrix(graph) @ x - result.rho * x))
            self.assertLessEqual(full_residual, 1e-9)

    def test_twins_share_perron_entries(self):
        result = spectral_radius(make_complete_split(40, 5))
        np.testing.assert_array_equal(result.x[:5], np.full(5, result.x[0]))
        np.testing.assert_array_equal(result.x[5:], np.full(35, result.x[5]))

    def test_dense_split_graph_at_dense_limit(self):
        for k in (2, 3):
            result = spectral_radius(make_complete_split(DENSE_LEMMA_LIMIT, 2 * k - 1))
            self.assertTrue(result.converged)
            self.assertLess(result.iterations, 10_000)
            self.assertAlmostEqual(result.rho, closed_form_split_rho(DENSE_LEMMA_LIMIT, k), delta=1e-9)
            self.assertLessEqual(result.residual, 1e-12 * result.rho)


class TestClosedFormAgreement(unittest.TestCase):
    def _check(self, step: int) -> None:
        for k in range(1, 6):
            for n in range(2 * k + 1, 201, step):
                result = spectral_radius(make_complete_split(n, 2 * k - 1))
                self.assertTrue(result.converged)
                self.assertAlmostEqual(result.rho, closed_form_split_rho(n, k), delta=1e-9, msg=f"n={n}, k={k}")

    def test_sampled(self):
        self._check(7)

    @unittest.skipUnless(RUN_SLOW, "set SEL_RUN_SLOW=1 to run")
    def test_full_grid(self):
        self._check(1)


if __name__ == "__main__":
    unittest.main()
