import math
import unittest

from src.common.exceptions import InvalidParameterError
from src.common.graph.graph import make_complete_split
from src.common.spectral.perron import spectral_radius
from src.common.spectral.split_spectrum import (
    closed_form_split_rho,
    erdos_posa_edge_bound,
    split_lower_bound_holds,
    split_perron_profile,
)


class TestClosedFormSplitRho(unittest.TestCase):
    def test_known_values(self):
        self.assertAlmostEqual(closed_form_split_rho(10, 2), 1 + math.sqrt(22), delta=1e-12)
        self.assertAlmostEqual(closed_form_split_rho(5, 1), 2.0, delta=1e-12)

    def test_star(self):
        for n in range(2, 50):
            self.assertAlmostEqual(closed_form_split_rho(n, 1), math.sqrt(n - 1), delta=1e-12)

    def test_invalid(self):
        with self.assertRaises(InvalidParameterError):
            closed_form_split_rho(3, 2)
        with self.assertRaises(InvalidParameterError):
            closed_form_split_rho(5, 0)

    def test_lower_bound(self):
        for k in range(2, 7):
            for n in range(2 * k + 3, 10**4 + 1):
                self.assertTrue(split_lower_bound_holds(n, k), msg=f"n={n}, k={k}")
                lower = math.sqrt((2 * k - 1) * n)
                self.assertGreaterEqual(closed_form_split_rho(n, k), lower * (1 - 1e-12), msg=f"n={n}, k={k}")

    def test_lower_bound_can_fail_below_range(self):
        # k=2, n=6: 4(k-1)^2 n = 24 < 27
        self.assertFalse(split_lower_bound_holds(6, 2))
        self.assertLess(closed_form_split_rho(6, 2), math.sqrt(18))


class TestSplitPerronProfile(unittest.TestCase):
    def test_ratio(self):
        profile = split_perron_profile(10, 2)
        self.assertEqual(profile.a, 1.0)
        self.assertAlmostEqual(profile.ratio, 3 / (1 + math.sqrt(22)), delta=1e-12)

    def test_eigen_equations(self):
        for k in range(1, 8):
            for n in (2 * k, 2 * k + 1, 50, 10**4, 10**8, 10**12):
                if n <= 2 * k - 1:
                    continue
                for residual in split_perron_profile(n, k).eigen_residuals():
                    self.assertLessEqual(residual, 1e-12)

    def test_ratio_decreases(self):
        for k in range(1, 6):
            ratios = [split_perron_profile(10**e, k).ratio for e in range(2, 9)]
            self.assertTrue(all(a > b for a, b in zip(ratios, ratios[1:])))

    def test_matches_power_iteration(self):
        for k in range(1, 7):
            n = 2 * k + 1
            profile = split_perron_profile(n, k)
            result = spectral_radius(make_complete_split(n, 2 * k - 1))
            ratios = result.ratios()
            self.assertAlmostEqual(result.rho, profile.rho, delta=1e-9)
            self.assertAlmostEqual(float(ratios[0]), 1.0, delta=1e-9)
            self.assertAlmostEqual(float(ratios[n - 1]), profile.ratio, delta=1e-9)


class TestEdgeBound(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(erdos_posa_edge_bound(48, 2), 138)
        self.assertEqual(erdos_posa_edge_bound(9, 2), 21)

    def test_equals_split_edge_count(self):
        for k in range(1, 7):
            for n in range(2 * k, 101):
                self.assertEqual(make_complete_split(n, 2 * k - 1).edge_count, erdos_posa_edge_bound(n, k))


if __name__ == "__main__":
    unittest.main()
