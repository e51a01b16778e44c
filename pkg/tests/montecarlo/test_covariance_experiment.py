import unittest

import numpy as np

from src.errors import ConfigError
from src.model.ExperimentConfig import ExperimentConfig
from src.montecarlo.CovarianceExperiment import COVARIANCE_COLUMNS, CovarianceExperiment, covariance_experiment
from src.theory.covariance import covariance_resolvents


def config(**montecarlo) -> ExperimentConfig:
    return ExperimentConfig.from_dict(
        {
            "ensemble": {"n": 48, "b": 4, "profile": {"family": "triangle"}, "distribution": {"family": "gaussian"}},
            "statistics": {"test_functions": [{"family": "polynomial", "coefficients": [0.0, 1.0]}]},
            "montecarlo": {"replicas": 30, "master_seed": 4, **montecarlo},
        }
    )


class TestCovarianceExperiment(unittest.TestCase):
    def test_table(self):
        pairs = [(2j, 3j), (1 + 1j, 2j)]
        table = covariance_experiment(config(), pairs)
        self.assertEqual(list(table.columns), COVARIANCE_COLUMNS)
        self.assertEqual(len(table), 2)
        for row, (z1, z2) in zip(table.itertuples(index=False), pairs):
            self.assertEqual((row.z1, row.z2), (z1, z2))
            self.assertEqual(row.theory, covariance_resolvents(z1, z2, config().profile, 0.0))
            self.assertTrue(np.isfinite(row.empirical))

    def test_shared_points_solved_once(self):
        experiment = CovarianceExperiment(config(), [(2j, 3j), (3j, 2j), (2j, 2j)])
        self.assertEqual(experiment.points(), [2j, 3j])

    def test_identical_seeds_give_zero_covariance(self):
        table = covariance_experiment(config(seeds=[11] * 30), [(2j, 3j)])
        self.assertLess(abs(table["empirical"][0]), 1e-20)

    def test_real_points_rejected(self):
        with self.assertRaises(ConfigError):
            CovarianceExperiment(config(), [(1.0, 2j)])


if __name__ == "__main__":
    unittest.main()
