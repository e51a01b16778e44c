import unittest

import numpy as np
from ddt import data, ddt, unpack

from src.errors import ConfigError
from src.model.function.GaussianBump import GaussianBump
from src.model.function.PoissonKernelFunction import PoissonKernelFunction
from src.model.function.PoissonSmoothed import PoissonSmoothed
from src.model.function.PolynomialFunction import PolynomialFunction
from src.model.function.SmoothBump import SmoothBump
from src.model.function.TestFunction import TestFunction

FUNCTIONS = (
    PolynomialFunction([0.0, 0.0, 1.0]),
    GaussianBump(0.5, 0.3, 2.0),
    SmoothBump(-0.2, 1.5),
    PoissonKernelFunction(0.4, center=1.0),
    PoissonSmoothed(GaussianBump(), 0.2),
)


@ddt
class TestTestFunctions(unittest.TestCase):
    @data(([0.0, 0.0, 1.0], "x^2"), ([1.0], "1"), ([0.0, 1.0], "x"), ([2.0, 0.0, -1.0], "2+-1*x^2"), ([0.0], "0"))
    @unpack
    def test_polynomial_names(self, coefficients, name):
        self.assertEqual(PolynomialFunction(coefficients).name, name)

    def test_polynomial_values_ascending(self):
        phi = PolynomialFunction([1.0, 2.0, 3.0])
        self.assertEqual(phi(2.0), 17.0)
        self.assertFalse(phi.is_integrable)
        self.assertTrue(PolynomialFunction([0.0]).is_integrable)

    @data([], [float("nan")], ["a"])
    def test_polynomial_rejects_bad_coefficients(self, coefficients):
        with self.assertRaises(ConfigError):
            PolynomialFunction(coefficients)

    def test_smooth_bump_support(self):
        phi = SmoothBump(1.0, 0.5, amplitude=3.0)
        self.assertEqual(phi(1.0), 3.0)
        self.assertEqual(phi(1.5), 0.0)
        self.assertEqual(phi(0.4), 0.0)
        self.assertGreater(phi(1.4), 0.0)
        self.assertEqual(phi.effective_support(), (0.5, 1.5))

    def test_gaussian_bump(self):
        phi = GaussianBump(1.0, 2.0, amplitude=3.0)
        self.assertAlmostEqual(phi(3.0), 3.0 * np.exp(-0.5), places=15)

    def test_poisson_kernel_integrates_to_one(self):
        x = np.linspace(-1e4, 1e4, 2_000_001)
        phi = PoissonKernelFunction(0.5)
        self.assertAlmostEqual(float(np.trapz(phi(x), x)), 1.0, delta=1e-4)
        self.assertTrue(phi.has_heavy_tails)

    def test_smoothing_needs_integrable_base(self):
        with self.assertRaises(ConfigError):
            PoissonSmoothed(PolynomialFunction([0.0, 1.0]), 0.1)
        with self.assertRaises(ConfigError):
            PoissonSmoothed(GaussianBump(), 0.0)

    def test_smoothed_name(self):
        self.assertEqual(PoissonSmoothed(GaussianBump(0.0, 1.0), 0.5).name, "gauss(0,1)*P(0.5)")

    @data(*FUNCTIONS)
    def test_dict_round_trip(self, phi):
        self.assertEqual(TestFunction.from_dict(phi.to_dict()), phi)

    @data(*FUNCTIONS)
    def test_vectorized_matches_scalar(self, phi):
        x = np.array([-1.0, 0.25, 1.5])
        np.testing.assert_allclose(phi(x), [phi(float(v)) for v in x], rtol=1e-12)

    @data(
        {"family": "spline"},
        {"family": "polynomial"},
        {"family": "gaussian_bump", "sigma": 1.0},
        {"family": "poisson_kernel"},
        {"family": "poisson_smoothed", "eta": 0.1},
    )
    def test_invalid_records(self, record):
        with self.assertRaises(ConfigError):
            TestFunction.from_dict(record)

    def test_custom_name_survives_round_trip(self):
        phi = TestFunction.from_dict({"family": "smooth_bump", "width": 0.5, "name": "narrow"})
        self.assertEqual(phi.name, "narrow")
        self.assertEqual(TestFunction.from_dict(phi.to_dict()).name, "narrow")


if __name__ == "__main__":
    unittest.main()
