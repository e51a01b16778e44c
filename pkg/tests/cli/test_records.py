import json
import unittest

import numpy as np

from src.cli.records import covariance_record, finite_n_record, format_record, parse_record, theory_record
from src.model.function.PolynomialFunction import PolynomialFunction
from src.model.profile.BoxProfile import BoxProfile
from src.model.VarianceBreakdown import VarianceBreakdown


class TestRecords(unittest.TestCase):
    def test_format_record(self):
        line = format_record("sample", a=np.float64(0.1), z=1 - 2j, n=np.int64(3), label="λ")
        self.assertNotIn("\n", line)
        self.assertIn("λ", line)
        self.assertEqual(parse_record(line), {"record": "sample", "a": 0.1, "z": [1.0, -2.0], "n": 3, "label": "λ"})

    def test_theory_record(self):
        breakdown = VarianceBreakdown(2.0, -1.0, 0.0)
        record = parse_record(theory_record(PolynomialFunction([0.0, 0.0, 1.0]), BoxProfile(), -2.0, breakdown))
        self.assertEqual(record["phi"]["name"], "x^2")
        self.assertEqual(record["profile"]["family"], "box")
        self.assertEqual(record["total"], 1.0)
        self.assertNotIn("kernel_truncation_radius", record)

    def test_covariance_record(self):
        record = parse_record(covariance_record(2j, 3j, -0.25 + 0j))
        self.assertEqual(record["value"], [-0.25, 0.0])

    def test_finite_n_gap(self):
        record = parse_record(finite_n_record(64, 8.0, 2.0, 1.0 + 1j, 1.0 - 1j, 0.5))
        self.assertEqual(record["gap"], 2.0)
        self.assertEqual(record["zeta"], [2.0, 0.0])

    def test_non_finite_gap_is_null(self):
        line = finite_n_record(64, 8.0, 2.0, complex(np.inf, 0.0), 1.0, 1.0)
        self.assertIsNone(json.loads(line)["gap"])


if __name__ == "__main__":
    unittest.main()
