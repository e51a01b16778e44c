import tempfile
import unittest
from pathlib import Path

import numpy as np

from src.errors import ReplicaError
from src.model.ExperimentConfig import ExperimentConfig
from src.model.function.PoissonSmoothed import PoissonSmoothed
from src.montecarlo.Experiment import Experiment
from src.montecarlo.ReplicaExperiment import ReplicaExperiment, dump_first_spectrum, dump_samples, run_experiment


def small_config(**montecarlo) -> ExperimentConfig:
    document = {
        "ensemble": {"n": 32, "b": 4, "profile": {"family": "box"}, "distribution": {"family": "gaussian"}},
        "statistics": {
            "test_functions": [
                {"family": "polynomial", "coefficients": [0.0, 1.0]},
                {"family": "polynomial", "coefficients": [0.0, 0.0, 1.0]},
            ]
        },
        "montecarlo": {"replicas": 20, "master_seed": 3, **montecarlo},
    }
    return ExperimentConfig.from_dict(document)


def fail_on_third(item: int) -> int:
    if item == 2:
        raise ValueError("boom")
    return item


class TestReplicaExperiment(unittest.TestCase):
    def test_report_shape(self):
        report = run_experiment(small_config())
        self.assertEqual([s.name for s in report.statistics], ["x", "x^2"])
        for summary in report.statistics:
            self.assertEqual(summary.sample_count, 20)
            self.assertAlmostEqual(summary.empirical_mean, 0.0, places=12)
            self.assertIsNone(summary.diagnostics)
            self.assertEqual(len(report.samples[summary.name]), 20)
        self.assertIsInstance(report.run_time, int)
        self.assertIsInstance(report.statistic("x").sobolev_norm, str)

    def test_deterministic(self):
        first, second = run_experiment(small_config()), run_experiment(small_config())
        self.assertEqual(first, second)
        self.assertEqual(first.samples, second.samples)

    def test_worker_count_does_not_change_results(self):
        serial = run_experiment(small_config(worker_count=1))
        parallel = run_experiment(small_config(worker_count=2))
        self.assertEqual(serial.digest, parallel.digest)
        self.assertEqual(serial.statistics, parallel.statistics)
        self.assertEqual(serial.samples, parallel.samples)

    def test_identical_seeds_do_not_fluctuate(self):
        report = run_experiment(small_config(seeds=[7] * 20))
        for summary in report.statistics:
            self.assertLess(summary.empirical_variance, 1e-25)

    def test_master_seed_matters(self):
        first = run_experiment(small_config(master_seed=1))
        second = run_experiment(small_config(master_seed=2))
        self.assertNotEqual(first.samples["x^2"], second.samples["x^2"])

    def test_theory_attached(self):
        report = run_experiment(small_config())
        self.assertAlmostEqual(report.statistic("x^2").theory.kernel_term, 2.0, places=8)

    def test_smoothing_width_applies_to_statistics(self):
        document = small_config().to_dict()
        document["statistics"] = {"test_functions": [{"family": "gaussian_bump", "width": 0.5}], "eta": 0.2}
        experiment = ReplicaExperiment(ExperimentConfig.from_dict(document))
        (phi,) = experiment.effective_test_functions()
        self.assertIsInstance(phi, PoissonSmoothed)
        report = experiment.run()
        self.assertEqual(report.statistics[0].name, "gauss(0,0.5)")
        self.assertIsInstance(report.statistics[0].sobolev_norm, float)

    def test_dumps(self):
        document = small_config().to_dict()
        document["output"]["dump_spectra"] = True
        report = run_experiment(ExperimentConfig.from_dict(document))
        with tempfile.TemporaryDirectory() as directory:
            paths = dump_samples(report, directory)
            self.assertEqual(sorted(p.name for p in paths), ["samples_x.txt", "samples_x_2.txt"])
            values = [float(v) for v in paths[0].read_text(encoding="utf-8").splitlines()]
            self.assertEqual(values, report.samples["x"])

            spectrum_path = dump_first_spectrum(report, directory)
            self.assertEqual(spectrum_path, Path(directory) / "spectrum_replica0.txt")
            self.assertEqual(len(spectrum_path.read_text(encoding="utf-8").splitlines()), 32)

    def test_no_spectrum_without_flag(self):
        self.assertIsNone(dump_first_spectrum(run_experiment(small_config()), "unused"))

    def test_failing_replica_is_named(self):
        experiment = ReplicaExperiment(small_config())
        with self.assertRaises(ReplicaError) as context:
            experiment.map_replicas(fail_on_third, [0, 1, 2, 3])
        self.assertEqual(context.exception.replica_id, 2)
        self.assertIsInstance(context.exception.cause, ValueError)

    def test_measure_time(self):
        result, elapsed = Experiment.measure_time(np.sum, [1, 2, 3])
        self.assertEqual(result, 6)
        self.assertGreaterEqual(elapsed, 0)


if __name__ == "__main__":
    unittest.main()
