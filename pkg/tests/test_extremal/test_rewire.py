import os
import random
import unittest

from src.common.cycle_packing.packing import has_k_disjoint_cycles
from src.common.exceptions import InvalidParameterError
from src.common.extremal.rewire import claim3_rewire
from src.common.graph.graph import Graph, VertexSet, make_path
from src.common.spectral.perron import spectral_radius_dense

RUN_SLOW = os.environ.get("SEL_RUN_SLOW") == "1"


def split_with_pendant_trees(rng: random.Random, k: int):
    """2k-1 团连满 m 个独立点, 再在独立点上挂若干小树

    返回 (图, 团, 森林顶点 -> 父节点)
    """
    c = 2 * k - 1
    m = rng.randint(2, 5)
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    edges += [(u, v) for u in range(c) for v in range(c, c + m)]
    parents = {}
    n = c + m
    for _ in range(rng.randint(1, 6)):
        parent = rng.choice(list(range(c, n)))
        parents[n] = parent
        edges.append((parent, n))
        n += 1
    return Graph.from_edges(n, edges), VertexSet.of(n, range(c)), parents


class TestClaim3Rewire(unittest.TestCase):
    def test_pendant_vertex_moves_to_hub(self):
        rewired = claim3_rewire(make_path(3), 2, 1, VertexSet.of(3, [0]))
        self.assertEqual(set(rewired.edges()), {(0, 1), (0, 2)})

    def test_hub_already_covered(self):
        graph = make_path(3)
        rewired = claim3_rewire(graph, 1, 2, VertexSet.of(3, [0]))
        self.assertEqual(rewired, graph.remove_edge(1, 2))

    def test_v4_in_hub_is_not_restored(self):
        rewired = claim3_rewire(make_path(3), 0, 1, VertexSet.of(3, [1, 2]))
        self.assertEqual(set(rewired.edges()), {(1, 2), (0, 2)})

    def test_v3_in_hub_is_skipped(self):
        rewired = claim3_rewire(make_path(3), 2, 1, VertexSet.of(3, [0, 2]))
        self.assertFalse(rewired.has_edge(1, 2))
        self.assertTrue(rewired.has_edge(0, 2))

    def test_invalid(self):
        graph = make_path(4)
        with self.assertRaises(InvalidParameterError):
            claim3_rewire(graph, 0, 2, VertexSet.of(4, [3]))
        with self.assertRaises(InvalidParameterError):
            claim3_rewire(graph, 0, 1, VertexSet.empty(4))
        with self.assertRaises(InvalidParameterError):
            claim3_rewire(graph, 0, 1, VertexSet.of(5, [3]))

    def test_symmetric_difference(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(3, 10)
            graph = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
            edges = list(graph.edges())
            if not edges:
                continue
            v3, v4 = rng.choice(edges)
            if rng.random() < 0.5:
                v3, v4 = v4, v3
            hub = VertexSet.of(n, [v for v in range(n) if v != v4 and rng.random() < 0.4] or [v3])
            rewired = claim3_rewire(graph, v3, v4, hub)
            expected = {(min(v3, v4), max(v3, v4))}
            expected |= {(min(v3, h), max(v3, h)) for h in hub if h != v3 and not graph.has_edge(v3, h)}
            self.assertEqual(set(graph.edges()) ^ set(rewired.edges()), expected)
            for h in hub:
                if h != v3:
                    self.assertTrue(rewired.has_edge(v3, h))

    def _check_instances(self, count: int, seed: int):
        rng = random.Random(seed)
        for _ in range(count):
            k = rng.randint(2, 3)
            graph, hub, parents = split_with_pendant_trees(rng, k)
            self.assertFalse(has_k_disjoint_cycles(graph, k).found)
            v3 = rng.choice(list(parents))
            rewired = claim3_rewire(graph, v3, parents[v3], hub)
            self.assertFalse(has_k_disjoint_cycles(rewired, k).found)
            self.assertGreater(spectral_radius_dense(rewired), spectral_radius_dense(graph))

    def test_feasible_and_increasing_on_split_with_trees(self):
        self._check_instances(300, 17)

    @unittest.skipUnless(RUN_SLOW, "set SEL_RUN_SLOW=1 to run")
    def test_feasible_and_increasing_many_instances(self):
        self._check_instances(1000, 23)


if __name__ == "__main__":
    unittest.main()
