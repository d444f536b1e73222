import random
import unittest

import networkx as nx

from src.common.cycle_packing.chordless import ChordlessCycle, enumerate_chordless_cycles
from src.common.exceptions import CapExceededError
from src.common.graph.graph import Graph, make_complete, make_complete_bipartite, make_cycle, make_path


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def brute_force_chordless(graph: Graph) -> set[frozenset[int]]:
    """所有简单圈中诱导子图恰好是圈的那些"""
    nx_graph = graph.to_networkx()
    found = set()
    for cycle in nx.simple_cycles(nx_graph):
        if len(cycle) < 3:
            continue
        if nx_graph.subgraph(cycle).number_of_edges() == len(cycle):
            found.add(frozenset(cycle))
    return found


class TestEnumerateChordlessCycles(unittest.TestCase):
    def test_cycle(self):
        cycles = enumerate_chordless_cycles(make_cycle(5))
        self.assertEqual(len(cycles), 1)
        self.assertEqual(cycles[0].vertices, (0, 1, 2, 3, 4))
        self.assertEqual(cycles[0].length, 5)

    def test_complete_graph(self):
        cycles = enumerate_chordless_cycles(make_complete(4))
        self.assertEqual([cycle.vertices for cycle in cycles], [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])

    def test_petersen(self):
        cycles = enumerate_chordless_cycles(Graph.from_networkx(nx.petersen_graph()))
        lengths = [cycle.length for cycle in cycles]
        self.assertEqual(lengths.count(5), 12)
        self.assertEqual(min(lengths), 5)

    def test_complete_bipartite(self):
        cycles = enumerate_chordless_cycles(make_complete_bipartite(3, 3))
        self.assertEqual(len(cycles), 9)
        self.assertTrue(all(cycle.length == 4 for cycle in cycles))

    def test_forest(self):
        self.assertEqual(enumerate_chordless_cycles(make_path(6)), [])

    def test_order_follows_the_cycle(self):
        rng = random.Random(5)
        for _ in range(50):
            graph = random_graph(rng, rng.randint(3, 9), 0.5)
            for cycle in enumerate_chordless_cycles(graph):
                self.assertEqual(cycle.order[0], cycle.vertices[0])
                self.assertEqual(tuple(sorted(cycle.order)), cycle.vertices)
                for i, v in enumerate(cycle.order):
                    self.assertTrue(graph.has_edge(v, cycle.order[(i + 1) % cycle.length]))

    def test_matches_brute_force(self):
        rng = random.Random(9)
        for _ in range(150):
            graph = random_graph(rng, rng.randint(1, 8), rng.random())
            cycles = enumerate_chordless_cycles(graph)
            self.assertEqual([cycle.vertices for cycle in cycles], sorted(cycle.vertices for cycle in cycles))
            self.assertEqual({frozenset(cycle.vertices) for cycle in cycles}, brute_force_chordless(graph))
            self.assertEqual(len(cycles), len({cycle.vertices for cycle in cycles}))

    def test_cap(self):
        with self.assertRaises(CapExceededError) as context:
            enumerate_chordless_cycles(make_complete(5), cap=3)
        self.assertEqual(len(context.exception.partial), 3)
        partial = context.exception.partial
        self.assertEqual(partial, sorted(partial))

    def test_cap_not_hit(self):
        self.assertEqual(len(enumerate_chordless_cycles(make_complete(5), cap=10)), 10)

    def test_unbounded(self):
        self.assertEqual(len(enumerate_chordless_cycles(make_complete(5), cap=None)), 10)

    def test_from_order_normalizes_rotation_and_direction(self):
        cycle = ChordlessCycle.from_order([3, 1, 0, 4])
        self.assertEqual(cycle.order, (0, 1, 3, 4))
        self.assertEqual(cycle.vertices, (0, 1, 3, 4))
        self.assertEqual(cycle.mask, 0b11011)
        self.assertEqual(ChordlessCycle.from_order([2, 0, 1]).order, (0, 1, 2))


if __name__ == "__main__":
    unittest.main()
