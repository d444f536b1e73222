import os
import unittest

from src.common.cycle_packing.packing import max_cycle_packing
from src.common.exceptions import CapExceededError, InvalidParameterError, UnsupportedSizeError
from src.common.extremal.enumeration import enumerate_feasible
from src.common.graph.canonical import canonical_form

RUN_SLOW = os.environ.get("SEL_RUN_SLOW") == "1"

# 各阶森林与树的同构类数
FOREST_COUNTS = {1: 1, 2: 2, 3: 3, 4: 6, 5: 10, 6: 20, 7: 37}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11}


def collect(n, k, **kwargs):
    graphs = []
    stats = enumerate_feasible(n, k, lambda graph, maximal: graphs.append((graph, maximal)), **kwargs)
    return stats, graphs


class TestEnumerateFeasible(unittest.TestCase):
    def test_forests_on_four_vertices(self):
        stats, graphs = collect(4, 1)
        self.assertEqual(stats.visited, 6)
        self.assertEqual(len(graphs), 6)
        self.assertTrue(all(graph.is_forest() for graph, _ in graphs))
        self.assertEqual(stats.per_level, [1, 1, 2, 2])
        self.assertEqual(stats.edge_maximal, 2)

    def test_forest_counts(self):
        for n in range(1, 7):
            stats, graphs = collect(n, 1)
            self.assertEqual(stats.visited, FOREST_COUNTS[n], msg=f"n={n}")
            maximal = [graph for graph, is_maximal in graphs if is_maximal]
            self.assertEqual(len(maximal), TREE_COUNTS[n], msg=f"n={n}")
            self.assertTrue(all(graph.is_connected() for graph in maximal))

    def test_all_graphs_on_four_vertices(self):
        for k in (2, 3):
            stats, graphs = collect(4, k)
            self.assertEqual(stats.visited, 11)
            self.assertEqual(stats.edge_maximal, 1)

    def test_five_vertices(self):
        stats, graphs = collect(5, 2)
        self.assertEqual(stats.visited, 34)
        self.assertTrue(all(max_cycle_packing(graph).nu <= 1 for graph, _ in graphs))

    def test_each_class_once(self):
        _, graphs = collect(6, 2)
        keys = [canonical_form(graph) for graph, _ in graphs]
        self.assertEqual(len(keys), len(set(keys)))
        self.assertTrue(all(max_cycle_packing(graph).nu <= 1 for graph, _ in graphs))

    def test_visited_graphs_are_canonical(self):
        _, graphs = collect(5, 1)
        for graph, _ in graphs:
            self.assertEqual(canonical_form(graph).to_graph(), graph)

    def test_pruning_soundness(self):
        for n, k in [(5, 1), (6, 1), (6, 2)]:
            _, pruned = collect(n, k)
            stats, unpruned = collect(n, k, prune_infeasible=False)
            self.assertFalse(stats.prune_infeasible)
            self.assertEqual(
                sorted((canonical_form(g), m) for g, m in pruned),
                sorted((canonical_form(g), m) for g, m in unpruned),
            )

    def test_isomorph_rejection_soundness(self):
        for n, k in [(4, 1), (5, 1), (5, 2)]:
            _, classes = collect(n, k)
            stats, labeled = collect(n, k, reject_isomorphs=False)
            self.assertFalse(stats.reject_isomorphs)
            self.assertEqual(
                {canonical_form(g) for g, _ in classes},
                {canonical_form(g) for g, _ in labeled},
            )
            self.assertGreaterEqual(len(labeled), len(classes))

    def test_parallel_matches_serial(self):
        serial, serial_graphs = collect(6, 2)
        parallel, parallel_graphs = collect(6, 2, jobs=2)
        self.assertEqual(serial.to_dict(), parallel.to_dict())
        self.assertEqual([g for g, _ in serial_graphs], [g for g, _ in parallel_graphs])

    def test_statistics(self):
        stats, _ = collect(5, 2)
        self.assertEqual(sum(stats.per_level), stats.visited)
        self.assertEqual(stats.to_dict()["n"], 5)
        self.assertGreaterEqual(stats.children_generated, stats.children_infeasible)

    def test_without_visitor(self):
        self.assertEqual(enumerate_feasible(4, 1).visited, 6)

    def test_limits(self):
        with self.assertRaises(CapExceededError):
            enumerate_feasible(10, 2, cap=9)
        with self.assertRaises(UnsupportedSizeError):
            enumerate_feasible(11, 2, cap=11)
        with self.assertRaises(InvalidParameterError):
            enumerate_feasible(0, 2)
        with self.assertRaises(InvalidParameterError):
            enumerate_feasible(4, 0)

    @unittest.skipUnless(RUN_SLOW, "set SEL_RUN_SLOW=1 to run")
    def test_forests_on_seven_vertices(self):
        stats, _ = collect(7, 1)
        self.assertEqual(stats.visited, FOREST_COUNTS[7])
        self.assertEqual(stats.edge_maximal, TREE_COUNTS[7])


if __name__ == "__main__":
    unittest.main()
