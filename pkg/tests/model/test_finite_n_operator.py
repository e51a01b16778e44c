import unittest

import numpy as np
from ddt import data, ddt, unpack

from src.errors import ConfigError, SizeLimitError
from src.model.FiniteNOperator import FiniteNOperator
from src.model.profile.BoxProfile import BoxProfile
from src.model.profile.TriangleProfile import TriangleProfile


@ddt
class TestFiniteNOperator(unittest.TestCase):
    def test_box_entries(self):
        operator = FiniteNOperator(10, 2.0, BoxProfile())
        self.assertEqual(operator.half_bandwidth, 2)
        np.testing.assert_array_equal(operator.weights, [0.5, 0.5, 0.5])

        dense = operator.to_sparse().toarray()
        i, k = np.indices((10, 10))
        expected = np.where(np.abs(i - k) <= 2, 0.25, 0.0)
        np.testing.assert_array_equal(dense, expected)

    def test_band_matches_sparse(self):
        operator = FiniteNOperator(20, 3.5, TriangleProfile())
        np.testing.assert_allclose(operator.band().to_dense(), operator.to_sparse().toarray(), rtol=0, atol=1e-15)

    def test_infinity_norm(self):
        self.assertAlmostEqual(FiniteNOperator(10, 2.0, BoxProfile()).infinity_norm(), 1.25, places=15)

    def test_restricted_vector(self):
        operator = FiniteNOperator(10, 2.0, BoxProfile())
        expected = np.zeros(10)
        expected[4:6] = 0.5
        np.testing.assert_array_equal(operator.restricted_vector(3), expected)
        np.testing.assert_array_equal(operator.restricted_vector(9), np.zeros(10))

    @data((0, 4), (3, 9), (5, 10))
    @unpack
    def test_restricted_vectors_match_columns(self, start, stop):
        operator = FiniteNOperator(12, 3.0, TriangleProfile())
        block = operator.restricted_vectors(start, stop)
        self.assertEqual(block.shape, (12 - start, stop - start))
        for column, p in enumerate(range(start, stop)):
            np.testing.assert_array_equal(block[:, column], operator.restricted_vector(p)[start:])

    @data(-1, 10)
    def test_restriction_index_out_of_range(self, p):
        with self.assertRaises(ConfigError):
            FiniteNOperator(10, 2.0, BoxProfile()).restricted_vector(p)

    @data((1, 2.0), (10, 1.5), (3, 4.0), (7.5, 2.0))
    @unpack
    def test_invalid_operators(self, n, b):
        with self.assertRaises(ConfigError):
            FiniteNOperator(n, b, BoxProfile())

    def test_size_limit(self):
        with self.assertRaises(SizeLimitError):
            FiniteNOperator(100_000, 4.0, BoxProfile())


if __name__ == "__main__":
    unittest.main()
