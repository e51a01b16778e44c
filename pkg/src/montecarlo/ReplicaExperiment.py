import logging
from pathlib import Path

import numpy as np

from src.bandeig.eigen_functions import dump_spectrum, eigenvalues
from src.ensemble.sampling import sample_band_matrix
from src.errors import DegenerateSampleError
from src.model.BandMatrixSpec import BandMatrixSpec
from src.model.ExperimentConfig import ExperimentConfig
from src.model.ExperimentReport import ExperimentReport
from src.model.Spectrum import Spectrum
from src.model.StatisticSummary import StatisticSummary
from src.model.function.TestFunction import TestFunction
from src.montecarlo.Experiment import Experiment
from src.montecarlo.diagnostics import MIN_NORMALITY_SAMPLES, char_function_compare, default_t_grid, normality_tests
from src.statistics.linear_statistics import center_scale, evaluate_les
from src.statistics.smoothing import poisson_smooth
from src.statistics.sobolev import admissibility_report
from src.theory.variance import clt_variance

logger = logging.getLogger(__name__)


def replica_statistics(item: tuple[BandMatrixSpec, list[TestFunction], bool]) -> tuple[list[float], Spectrum | None]:
    """
    One replica: sample the band matrix, solve for its spectrum once and evaluate every statistic.
    """

    spec, test_functions, keep_spectrum = item
    spectrum = eigenvalues(sample_band_matrix(spec))
    values = [evaluate_les(spectrum, phi) for phi in test_functions]
    return values, spectrum if keep_spectrum else None


class ReplicaExperiment(Experiment):
    """
    Replicated linear eigenvalue statistics of the band ensemble against their limiting variances.
    """

    def effective_test_functions(self) -> list[TestFunction]:
        """
        The configured test functions, Poisson-smoothed when the config sets eta.
        """

        if self.config.eta is None:
            return list(self.config.test_functions)
        return [poisson_smooth(phi, self.config.eta) for phi in self.config.test_functions]

    def _run(self) -> tuple[np.ndarray, Spectrum | None]:
        test_functions = self.effective_test_functions()
        specs = self.replica_specs()
        items = [(spec, test_functions, r == 0 and self.config.dump_spectra) for r, spec in enumerate(specs)]

        results = self.map_replicas(replica_statistics, items)
        values = np.array([row for row, _ in results])
        return values, results[0][1]

    def _convert_result(self, result: tuple[np.ndarray, Spectrum | None], run_time: int) -> ExperimentReport:
        values, first_spectrum = result
        config = self.config
        seeds = self.replica_seeds()
        kappa4 = config.distribution.kappa4

        summaries, samples = [], {}
        for column, (phi, effective) in enumerate(zip(config.test_functions, self.effective_test_functions())):
            fluctuations = center_scale(list(values[:, column]), config.b, config.n, seeds)
            sample = np.array([f.value for f in fluctuations])
            samples[phi.name] = sample.tolist()

            theory = clt_variance(effective, config.profile, kappa4)
            variance = float(np.var(sample, ddof=1))

            try:
                diagnostics = normality_tests(sample)
            except DegenerateSampleError as e:
                logger.warning(f"No normality diagnostics for {phi.name}: {e}")
                diagnostics = None

            reference = theory.total if theory.total > 0 else variance
            summaries.append(
                StatisticSummary(
                    phi.name,
                    sample.size,
                    float(np.mean(sample)),
                    variance,
                    diagnostics,
                    char_function_compare(sample, reference, default_t_grid(reference)),
                    theory,
                    admissibility_report(phi, config.sobolev_s),
                )
            )

        if config.replicas < MIN_NORMALITY_SAMPLES:
            logger.warning(f"Only {config.replicas} replicas; statistical acceptance needs {MIN_NORMALITY_SAMPLES}")

        return ExperimentReport(config, summaries, run_time, samples=samples, first_spectrum=first_spectrum)


def run_experiment(config: ExperimentConfig, track_progress: bool = False) -> ExperimentReport:
    return ReplicaExperiment(config, track_progress).run()


def dump_samples(report: ExperimentReport, directory: str | Path) -> list[Path]:
    """
    Write the raw fluctuation samples of every test function, one per line.
    """

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, sample in report.samples.items():
        path = directory / f"samples_{_file_safe(name)}.txt"
        with open(path, "w", encoding="utf-8") as file:
            for value in sample:
                file.write(f"{value:.17g}\n")
        paths.append(path)
    return paths


def dump_first_spectrum(report: ExperimentReport, directory: str | Path) -> Path | None:
    if report.first_spectrum is None:
        return None
    path = Path(directory) / "spectrum_replica0.txt"
    dump_spectrum(report.first_spectrum, path)
    return path


def _file_safe(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in name)
