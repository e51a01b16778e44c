import unittest

import numpy as np
from ddt import data, ddt
from scipy import integrate

from src.errors import ConfigError
from src.theory.semicircle import semicircle_density, stieltjes_g, stieltjes_g_derivative


@ddt
class TestSemicircle(unittest.TestCase):
    def test_density_values(self):
        self.assertAlmostEqual(semicircle_density(0.0), 1.0 / np.pi, places=15)
        self.assertEqual(semicircle_density(2.0), 0.0)
        self.assertEqual(semicircle_density(-2.0), 0.0)
        self.assertEqual(semicircle_density(3.0), 0.0)

    def test_density_is_probability(self):
        mass, _ = integrate.quad(semicircle_density, -2.0, 2.0)
        second, _ = integrate.quad(lambda x: x * x * semicircle_density(x), -2.0, 2.0)
        self.assertAlmostEqual(mass, 1.0, places=10)
        self.assertAlmostEqual(second, 1.0, places=10)

    def test_value_at_2i(self):
        self.assertAlmostEqual(stieltjes_g(2j), 1j * (np.sqrt(2.0) - 1.0), places=15)

    def test_real_axis_outside_cut(self):
        self.assertAlmostEqual(stieltjes_g(3.0), (-3.0 + np.sqrt(5.0)) / 2.0, places=15)
        self.assertAlmostEqual(stieltjes_g(-3.0), (3.0 - np.sqrt(5.0)) / 2.0, places=15)

    def test_boundary_value_is_density(self):
        for x in (-1.5, 0.0, 0.8):
            self.assertAlmostEqual(stieltjes_g(x + 1e-9j).imag, np.pi * semicircle_density(x), places=7)

    @data(1 + 1j, -0.5 + 0.1j, 4 - 3j, 1e-3 - 1e3j)
    def test_quadratic_and_conjugation(self, z):
        g = stieltjes_g(z)
        self.assertLess(abs(g * g + z * g + 1.0), 1e-13 * max(1.0, abs(z)))
        self.assertLess(abs(g), 1.0)
        self.assertAlmostEqual(stieltjes_g(np.conj(z)), np.conj(g), places=15)
        self.assertGreater(g.imag * np.sign(z.imag), 0.0)

    def test_vectorized(self):
        z = np.array([2j, 1 + 1j, 3.0 + 0j])
        np.testing.assert_allclose(stieltjes_g(z), [stieltjes_g(complex(v)) for v in z], rtol=1e-15)

    @data(0.0, 1.9, -2.0)
    def test_undefined_on_cut(self, x):
        with self.assertRaises(ConfigError):
            stieltjes_g(x)

    @data(1 + 1j, -2 + 0.5j, 0.3j)
    def test_derivative_matches_difference(self, z):
        h = 1e-6
        difference = (stieltjes_g(z + h) - stieltjes_g(z - h)) / (2.0 * h)
        self.assertAlmostEqual(stieltjes_g_derivative(z), difference, delta=1e-8)


if __name__ == "__main__":
    unittest.main()
