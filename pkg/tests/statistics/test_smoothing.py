import unittest

import numpy as np
from ddt import data, ddt, unpack

from src.errors import ConfigError
from src.model.function.GaussianBump import GaussianBump
from src.model.function.PoissonKernelFunction import PoissonKernelFunction
from src.statistics.smoothing import convolve_with_poisson, integrate_real_line, poisson_kernel, poisson_smooth


@ddt
class TestSmoothing(unittest.TestCase):
    @data((0.0, 1.0, 1.0 / np.pi), (0.25, 0.25, 1.0 / (2.0 * np.pi * 0.25)), (3.0, 1.0, 1.0 / (10.0 * np.pi)))
    @unpack
    def test_poisson_kernel_values(self, x, eta, expected):
        self.assertAlmostEqual(poisson_kernel(x, eta), expected, places=15)

    def test_poisson_kernel_needs_positive_width(self):
        with self.assertRaises(ConfigError):
            poisson_kernel(0.0, 0.0)

    def test_poisson_kernel_mass(self):
        total = integrate_real_line(lambda x: poisson_kernel(x, 0.3), -1.0, 1.0, heavy_tails=True)
        self.assertAlmostEqual(total, 1.0, places=8)

    def test_semigroup(self):
        x = np.array([-1.0, 0.0, 0.7])
        convolved = convolve_with_poisson(PoissonKernelFunction(0.3), 0.2, x)
        np.testing.assert_allclose(convolved, poisson_kernel(x, 0.5), rtol=0, atol=1e-8)

    def test_gaussian_closed_form_matches_quadrature(self):
        phi = GaussianBump(0.2, 0.7, amplitude=1.5)
        x = np.linspace(-3.0, 3.0, 7)
        closed = poisson_smooth(phi, 0.3)(x)
        numeric = poisson_smooth(phi, 0.3, use_closed_form=False)(x)
        np.testing.assert_allclose(closed, numeric, rtol=0, atol=1e-8)

    def test_smoothing_preserves_mass(self):
        phi = GaussianBump(0.0, 0.5)
        smoothed = poisson_smooth(phi, 0.2)
        mass = 0.5 * np.sqrt(2.0 * np.pi)
        smoothed_mass = integrate_real_line(smoothed, -3.0, 3.0, heavy_tails=True)
        self.assertAlmostEqual(smoothed_mass, mass, delta=1e-6)

    def test_scalar_input(self):
        self.assertIsInstance(convolve_with_poisson(GaussianBump(), 0.1, 0.0), float)


if __name__ == "__main__":
    unittest.main()
