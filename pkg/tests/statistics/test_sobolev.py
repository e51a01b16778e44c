import unittest

import numpy as np
from ddt import data, ddt, unpack

from src.errors import ConfigError
from src.model.function.GaussianBump import GaussianBump
from src.model.function.PolynomialFunction import PolynomialFunction
from src.model.function.SmoothBump import SmoothBump
from src.statistics.sobolev import admissibility_report, sobolev_norm


@ddt
class TestSobolev(unittest.TestCase):
    def test_zero_function(self):
        self.assertEqual(sobolev_norm(PolynomialFunction([0.0])), 0.0)

    def test_gaussian_closed_form(self):
        # |phi^(k)|^2 = 2 pi e^{-k^2}; the weight (1 + 2|k|)^2 integrates to 2 pi (3 sqrt(pi) + 4)
        expected = np.sqrt(2.0 * np.pi * (3.0 * np.sqrt(np.pi) + 4.0))
        self.assertAlmostEqual(sobolev_norm(GaussianBump(0.0, 1.0), s=1.0), expected, delta=1e-5 * expected)

    def test_shift_invariant(self):
        first = sobolev_norm(SmoothBump(0.0, 1.0))
        second = sobolev_norm(SmoothBump(3.0, 1.0))
        self.assertAlmostEqual(first, second, delta=1e-5 * first)

    def test_increasing_in_index(self):
        phi = GaussianBump(0.0, 0.5)
        self.assertLess(sobolev_norm(phi, 1.0), sobolev_norm(phi, 2.5))

    @data((PolynomialFunction([0.0, 1.0]), 2.5), (GaussianBump(), 0.0))
    @unpack
    def test_rejects(self, phi, s):
        with self.assertRaises(ConfigError):
            sobolev_norm(phi, s)

    def test_report_marks_polynomials(self):
        self.assertIsInstance(admissibility_report(PolynomialFunction([0.0, 0.0, 1.0])), str)
        self.assertIsInstance(admissibility_report(GaussianBump()), float)


if __name__ == "__main__":
    unittest.main()
