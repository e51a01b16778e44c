import logging

import numpy as np
import pandas as pd

from src.bandeig.eigen_functions import eigenvalues, stieltjes_trace
from src.ensemble.sampling import sample_coupled
from src.errors import ConfigError
from src.model.BandMatrix import BandMatrix, PeriodicBandMatrix
from src.model.BandMatrixSpec import BandMatrixSpec
from src.model.ExperimentConfig import ExperimentConfig
from src.montecarlo.Experiment import Experiment

logger = logging.getLogger(__name__)

TRUNCATION_COLUMNS = ["b", "estimate", "stderr", "corner"]


def band_difference_squared(band: BandMatrix, periodic: PeriodicBandMatrix) -> float:
    """
    Tr (M - M_per)^2 restricted to the band |i - j| <= w, where the pair differs only by truncation.
    """

    difference = band.diagonals - periodic.core.diagonals
    return float(np.sum(difference[0] ** 2) + 2.0 * np.sum(difference[1:] ** 2))


def corner_squared(periodic: PeriodicBandMatrix) -> float:
    # both corner copies
    return 2.0 * float(np.sum(periodic.corner**2))


def difference_frobenius_squared(band: BandMatrix, periodic: PeriodicBandMatrix) -> float:
    """
    Tr (M - M_per)^2 of a coupled pair: the band part plus the corner entries M does not have.
    """
    return band_difference_squared(band, periodic) + corner_squared(periodic)


def truncation_sample(spec: BandMatrixSpec) -> tuple[float, float]:
    band, periodic = sample_coupled(spec)
    return band_difference_squared(band, periodic) / spec.n, corner_squared(periodic) / spec.n


def resolvent_difference_sample(item: tuple[BandMatrixSpec, complex]) -> complex:
    spec, z = item
    band, periodic = sample_coupled(spec)
    return stieltjes_trace(eigenvalues(band), z) - stieltjes_trace(eigenvalues(periodic), z)


class TruncationExperiment(Experiment):
    """
    Monte Carlo estimate of n^{-1} E Tr(M - M_per)^2 inside the band over a list of bandwidths, with
    the decay exponent fitted on a log-log scale. The corner entries of M_per are reported apart,
    as their mass grows like b / n rather than decaying in b.

    Attributes:
        bandwidths (list[float]): The values of b to sample at.
    """

    def __init__(self, config: ExperimentConfig, bandwidths: list[float], track_progress: bool = False):
        if not bandwidths:
            raise ConfigError("Truncation experiment needs at least one bandwidth.")
        super().__init__(config, track_progress)
        self.bandwidths = [float(b) for b in bandwidths]

    def _run(self) -> list[np.ndarray]:
        estimates = []
        for b in self.bandwidths:
            config = self.config.with_point(self.config.n, b)
            samples = self.map_replicas(truncation_sample, self.replica_specs(config))
            estimates.append(np.array(samples).reshape(-1, 2))
            logger.debug(f"Truncation effect at b={b}: {np.mean(estimates[-1][:, 0])}")
        return estimates

    def _convert_result(self, result: list[np.ndarray], run_time: int) -> tuple[pd.DataFrame, float | None]:
        table = pd.DataFrame(
            {
                "b": self.bandwidths,
                "estimate": [float(np.mean(s[:, 0])) for s in result],
                "stderr": [float(np.std(s[:, 0], ddof=1) / np.sqrt(len(s))) for s in result],
                "corner": [float(np.mean(s[:, 1])) for s in result],
            },
            columns=TRUNCATION_COLUMNS,
        )
        return table, fitted_exponent(table)


def fitted_exponent(table: pd.DataFrame) -> float | None:
    """
    Slope of log(estimate) against log(b), or None when it is not defined.
    """

    positive = table[table["estimate"] > 0]
    if len(positive) < 2:
        return None
    slope, _ = np.polyfit(np.log(positive["b"]), np.log(positive["estimate"]), 1)
    return float(slope)


def truncation_effect(
    config: ExperimentConfig, bandwidths: list[float] = None, track_progress: bool = False
) -> tuple[pd.DataFrame, float | None]:
    """
    Estimates of n^{-1} E Tr(M - M_per)^2 per bandwidth (the configured b by default) and the fitted
    decay exponent.
    """

    bandwidths = [config.b] if bandwidths is None else bandwidths
    return TruncationExperiment(config, bandwidths, track_progress).run()


class ResolventGapExperiment(Experiment):
    """
    (b / n) Var{Tr(M - z)^{-1} - Tr(M_per - z)^{-1}} over coupled pairs, with the variance of a
    complex variable taken as E|X - E X|^2.
    """

    def __init__(self, config: ExperimentConfig, z: complex, track_progress: bool = False):
        if complex(z).imag == 0:
            raise ConfigError(f"Resolvent gap needs a non-real spectral parameter, got z={z}.")
        super().__init__(config, track_progress)
        self.z = complex(z)

    def _run(self) -> np.ndarray:
        items = [(spec, self.z) for spec in self.replica_specs()]
        return np.array(self.map_replicas(resolvent_difference_sample, items))

    def _convert_result(self, result: np.ndarray, run_time: int) -> float:
        centered = result - np.mean(result)
        variance = float(np.sum(np.abs(centered) ** 2) / (result.size - 1))
        return self.config.b / self.config.n * variance


def resolvent_gap(config: ExperimentConfig, z: complex, track_progress: bool = False) -> float:
    return ResolventGapExperiment(config, z, track_progress).run()
