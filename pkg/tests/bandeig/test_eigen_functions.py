import tempfile
import unittest
from pathlib import Path

import numpy as np
from ddt import data, ddt, unpack

from src.bandeig.eigen_functions import (
    dense_eigenvalues,
    dump_spectrum,
    eigenvalues,
    reduce_to_tridiagonal,
    stieltjes_trace,
    tridiag_eigenvalues,
)
from src.ensemble.sampling import sample_band_matrix
from src.errors import ConfigError
from src.model.BandMatrix import BandMatrix, PeriodicBandMatrix
from src.model.BandMatrixSpec import BandMatrixSpec
from src.model.distribution.GaussianEntries import GaussianEntries
from src.model.profile.BoxProfile import BoxProfile
from src.model.Spectrum import Spectrum
from src.model.Tridiagonal import Tridiagonal
from src.theory.semicircle import stieltjes_g


def semicircle_cdf(x: np.ndarray) -> np.ndarray:
    return 0.5 + x * np.sqrt(4.0 - x**2) / (4.0 * np.pi) + np.arcsin(x / 2.0) / np.pi


def random_band(n: int, w: int, seed: int) -> BandMatrix:
    return BandMatrix(np.random.default_rng(seed).standard_normal((w + 1, n)))


@ddt
class TestEigenFunctions(unittest.TestCase):
    def test_diagonal_passthrough(self):
        m = BandMatrix([[3.0, -1.0, 2.0]])
        t = reduce_to_tridiagonal(m)
        np.testing.assert_array_equal(t.diag, [3.0, -1.0, 2.0])
        np.testing.assert_array_equal(t.offdiag, [0.0, 0.0])
        np.testing.assert_array_equal(eigenvalues(m).eigenvalues, [-1.0, 2.0, 3.0])

    def test_tridiagonal_passthrough(self):
        m = random_band(9, 1, 0)
        t = reduce_to_tridiagonal(m)
        np.testing.assert_array_equal(t.diag, m.diagonals[0])
        np.testing.assert_array_equal(t.offdiag, m.diagonal(1))

    def test_discrete_laplacian(self):
        n = 50
        t = Tridiagonal(np.full(n, 2.0), np.full(n - 1, -1.0))
        expected = 2.0 - 2.0 * np.cos(np.arange(1, n + 1) * np.pi / (n + 1))
        np.testing.assert_allclose(tridiag_eigenvalues(t).eigenvalues, np.sort(expected), rtol=0, atol=1e-13)

    @data((30, 4, 1), (50, 7, 2), (64, 8, 3), (2, 1, 4), (17, 16, 5))
    @unpack
    def test_band_matches_dense(self, n, w, seed):
        m = random_band(n, w, seed)
        expected = dense_eigenvalues(m)
        scale = max(np.max(np.abs(expected)), 1.0)
        np.testing.assert_allclose(eigenvalues(m).eigenvalues, expected, rtol=0, atol=1e-10 * scale)

    @data((30, 4), (40, 9))
    @unpack
    def test_reduction_keeps_invariants(self, n, w):
        m = random_band(n, w, n + w)
        t = reduce_to_tridiagonal(m)
        self.assertAlmostEqual(float(np.sum(t.diag)), m.trace(), places=10)
        frobenius = float(np.sum(t.diag**2) + 2.0 * np.sum(t.offdiag**2))
        self.assertAlmostEqual(frobenius, m.frobenius_squared(), delta=1e-10 * m.frobenius_squared())

    def test_zero_matrix(self):
        np.testing.assert_array_equal(eigenvalues(BandMatrix(np.zeros((4, 20)))).eigenvalues, np.zeros(20))

    def test_periodic_matches_dense(self):
        rng = np.random.default_rng(11)
        m = PeriodicBandMatrix(BandMatrix(rng.standard_normal((3, 12))), rng.standard_normal((2, 2)))
        np.testing.assert_allclose(eigenvalues(m).eigenvalues, dense_eigenvalues(m), rtol=0, atol=1e-12)

    def test_non_positive_tolerance(self):
        with self.assertRaises(ConfigError):
            tridiag_eigenvalues(Tridiagonal([1.0, 2.0], [0.5]), tol=0.0)

    @data((np.array([0.0]), 1j, 1j), (np.zeros(5), 0.5j, 10j), (np.array([1.0, -1.0]), 1j, 1j))
    @unpack
    def test_stieltjes_trace(self, values, z, expected):
        self.assertAlmostEqual(stieltjes_trace(Spectrum(values), z), expected, places=14)

    def test_stieltjes_trace_needs_non_real_argument(self):
        with self.assertRaises(ConfigError):
            stieltjes_trace(Spectrum([0.0, 1.0]), 0.5)

    def test_dump_spectrum(self):
        spectrum = Spectrum([1.0 / 3.0, -2.0, 0.1])
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "nested" / "spectrum.txt"
            dump_spectrum(spectrum, path)
            values = [float(line) for line in path.read_text(encoding="utf-8").splitlines()]
        self.assertEqual(values, list(spectrum.eigenvalues))


class TestSemicircleLimit(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        spec = BandMatrixSpec(2000, 50.0, BoxProfile(), GaussianEntries(), seed=7)
        cls.spectrum = eigenvalues(sample_band_matrix(spec))

    def test_histogram_close_to_semicircle(self):
        edges = np.linspace(-2.0, 2.0, 21)
        empirical = np.histogram(self.spectrum.eigenvalues, bins=edges)[0] / self.spectrum.n
        expected = np.diff(semicircle_cdf(edges))
        outside = 1.0 - np.sum(empirical)
        self.assertLessEqual(0.5 * (np.sum(np.abs(empirical - expected)) + outside), 0.05)

    def test_normalized_trace_of_resolvent(self):
        z = 2j
        self.assertLessEqual(abs(stieltjes_trace(self.spectrum, z) / self.spectrum.n - stieltjes_g(z)), 0.02)

    def test_mean_square_eigenvalue(self):
        self.assertAlmostEqual(self.spectrum.second_moment() / self.spectrum.n, 1.0, delta=0.05)

    def test_resolvent_trace_is_herglotz(self):
        for z in (0.3j, 1.5 + 0.01j, -2.5 + 1j, 10 + 1e-3j):
            self.assertGreater(stieltjes_trace(self.spectrum, z).imag, 0.0)
            self.assertLess(stieltjes_trace(self.spectrum, np.conj(z)).imag, 0.0)


if __name__ == "__main__":
    unittest.main()
