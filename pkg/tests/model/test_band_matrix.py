import unittest

import numpy as np
from ddt import data, ddt

from src.errors import ConfigError, InvariantError
from src.model.BandMatrix import BandMatrix, PeriodicBandMatrix
from src.model.Spectrum import Spectrum
from src.model.Tridiagonal import Tridiagonal


def random_band(n: int, w: int, seed: int = 0) -> BandMatrix:
    return BandMatrix(np.random.default_rng(seed).standard_normal((w + 1, n)))


@ddt
class TestBandMatrix(unittest.TestCase):
    @data((6, 0), (6, 2), (9, 4), (3, 2))
    def test_dense_round_trip(self, shape):
        n, w = shape
        m = random_band(n, w)
        dense = m.to_dense()

        np.testing.assert_array_equal(dense, dense.T)
        self.assertEqual(BandMatrix.from_dense(dense, w), m)
        i, j = np.indices(dense.shape)
        self.assertTrue(np.all(dense[np.abs(i - j) > w] == 0.0))

    def test_padding_is_cleared(self):
        m = BandMatrix(np.ones((3, 5)))
        np.testing.assert_array_equal(m.diagonals[1], [1, 1, 1, 1, 0])
        np.testing.assert_array_equal(m.diagonals[2], [1, 1, 1, 0, 0])

    def test_storage_is_read_only(self):
        m = random_band(5, 1)
        with self.assertRaises(ValueError):
            m.diagonals[0, 0] = 1.0

    def test_trace_and_frobenius(self):
        m = random_band(12, 3, seed=4)
        dense = m.to_dense()
        self.assertAlmostEqual(m.trace(), float(np.trace(dense)), places=12)
        self.assertAlmostEqual(m.frobenius_squared(), float(np.sum(dense**2)), places=12)

    def test_bad_storage_shape(self):
        with self.assertRaises(ConfigError):
            BandMatrix(np.ones(4))


class TestPeriodicBandMatrix(unittest.TestCase):
    def test_corner_placement(self):
        core = random_band(8, 2, seed=1)
        corner = np.array([[1.0, 2.0], [9.0, 3.0]])
        periodic = PeriodicBandMatrix(core, corner)
        dense = periodic.to_dense()

        self.assertEqual(dense[0, 6], 1.0)
        self.assertEqual(dense[0, 7], 2.0)
        self.assertEqual(dense[1, 7], 3.0)
        # below the corner diagonal is outside the periodic band
        self.assertEqual(dense[1, 6], 0.0)
        np.testing.assert_array_equal(dense, dense.T)

    def test_frobenius_counts_both_corners(self):
        periodic = PeriodicBandMatrix(random_band(8, 2, seed=2), np.triu(np.ones((2, 2))))
        self.assertAlmostEqual(periodic.frobenius_squared(), float(np.sum(periodic.to_dense() ** 2)), places=12)

    def test_overlap_is_rejected(self):
        with self.assertRaises(ConfigError):
            PeriodicBandMatrix(random_band(5, 2), np.zeros((2, 2)))


class TestSpectrumAndTridiagonal(unittest.TestCase):
    def test_spectrum_is_sorted(self):
        s = Spectrum([3.0, -1.0, 2.0])
        np.testing.assert_array_equal(s.eigenvalues, [-1.0, 2.0, 3.0])
        self.assertEqual(s.trace(), 4.0)
        self.assertEqual(s.second_moment(), 14.0)

    def test_spectrum_rejects_nan(self):
        with self.assertRaises(InvariantError):
            Spectrum([0.0, np.nan])

    def test_tridiagonal_shape(self):
        with self.assertRaises(ConfigError):
            Tridiagonal(np.ones(4), np.ones(4))
        t = Tridiagonal([1.0, 2.0], [0.5])
        np.testing.assert_array_equal(t.to_dense(), [[1.0, 0.5], [0.5, 2.0]])


if __name__ == "__main__":
    unittest.main()
