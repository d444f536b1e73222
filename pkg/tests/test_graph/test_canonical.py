import itertools
import random
import unittest

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from src.common.exceptions import UnsupportedSizeError
from src.common.graph.canonical import CanonicalKey, canonical_form, canonical_graph, canonical_labeling
from src.common.graph.graph import Graph, make_complete, make_complete_split, make_cycle, make_path


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


class TestCanonicalForm(unittest.TestCase):
    def test_relabeled_triangle(self):
        triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(canonical_form(triangle), canonical_form(triangle.relabel([2, 0, 1])))

    def test_path_and_triangle_differ(self):
        self.assertNotEqual(canonical_form(make_path(3)), canonical_form(make_complete(3)))

    def test_graphs_on_four_vertices(self):
        keys = {canonical_form(graph) for graph in all_labeled_graphs(4)}
        self.assertEqual(len(keys), 11)

    def test_graphs_on_five_vertices(self):
        keys = {canonical_form(graph) for graph in all_labeled_graphs(5)}
        self.assertEqual(len(keys), 34)

    def test_atlas_classes_are_distinct(self):
        keys = set()
        count = 0
        for graph in graph_atlas_g():
            if graph.number_of_nodes() == 0:
                continue
            count += 1
            keys.add(canonical_form(Graph.from_networkx(graph)))
        self.assertEqual(len(keys), count)

    def test_permutation_invariance(self):
        rng = random.Random(1)
        for _ in range(1000):
            n = rng.randint(1, 8)
            graph = random_graph(rng, n, rng.random())
            perm = list(range(n))
            rng.shuffle(perm)
            self.assertEqual(canonical_form(graph), canonical_form(graph.relabel(perm)))

    def test_agrees_with_networkx_isomorphism(self):
        rng = random.Random(2)
        for _ in range(300):
            n = rng.randint(2, 7)
            edges = rng.randint(0, n * (n - 1) // 2)
            pairs = list(itertools.combinations(range(n), 2))
            first = Graph.from_edges(n, rng.sample(pairs, edges))
            second = Graph.from_edges(n, rng.sample(pairs, edges))
            self.assertEqual(
                canonical_form(first) == canonical_form(second),
                nx.is_isomorphic(first.to_networkx(), second.to_networkx()),
            )

    def test_canonical_graph_is_isomorphic(self):
        rng = random.Random(3)
        for _ in range(100):
            graph = random_graph(rng, rng.randint(1, 9), 0.5)
            key, order = canonical_labeling(graph)
            self.assertEqual(sorted(order), list(range(graph.n)))
            rebuilt = canonical_graph(graph)
            self.assertTrue(nx.is_isomorphic(graph.to_networkx(), rebuilt.to_networkx()))
            self.assertEqual(canonical_form(rebuilt), key)

    def test_hex_round_trip(self):
        key = canonical_form(make_complete_split(9, 3))
        self.assertEqual(CanonicalKey.from_hex(key.hex), key)

    def test_symmetric_graphs(self):
        # 孪生剪枝不能丢掉最小的叶子
        for graph in (make_complete(10), Graph.empty(10), make_cycle(10), make_complete_split(10, 3)):
            perm = list(range(graph.n))
            random.Random(4).shuffle(perm)
            self.assertEqual(canonical_form(graph), canonical_form(graph.relabel(perm)))

    def test_size_limit(self):
        with self.assertRaises(UnsupportedSizeError):
            canonical_form(make_path(11))


if __name__ == "__main__":
    unittest.main()
