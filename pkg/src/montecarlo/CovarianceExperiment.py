import numpy as np
import pandas as pd

from src.bandeig.eigen_functions import eigenvalues, stieltjes_trace
from src.ensemble.sampling import sample_band_matrix
from src.errors import ConfigError
from src.model.BandMatrixSpec import BandMatrixSpec
from src.model.ExperimentConfig import ExperimentConfig
from src.montecarlo.Experiment import Experiment
from src.theory.covariance import covariance_resolvents

COVARIANCE_COLUMNS = ["z1", "z2", "empirical", "theory"]


def resolvent_traces(item: tuple[BandMatrixSpec, list[complex]]) -> list[complex]:
    spec, points = item
    spectrum = eigenvalues(sample_band_matrix(spec))
    return [stieltjes_trace(spectrum, z) for z in points]


class CovarianceExperiment(Experiment):
    """
    Monte Carlo estimate of (b / n) Cov{gamma_n(z1), gamma_n(z2)} for gamma_n(z) = Tr(M - z)^{-1},
    in the bilinear convention E{X Y} - E{X} E{Y} without conjugation, next to its limit C(z1, z2).

    Attributes:
        z_pairs (list[tuple[complex, complex]]): The spectral points.
    """

    def __init__(self, config: ExperimentConfig, z_pairs: list[tuple[complex, complex]], track_progress: bool = False):
        for z1, z2 in z_pairs:
            if complex(z1).imag == 0 or complex(z2).imag == 0:
                raise ConfigError(f"Covariance needs non-real spectral points, got ({z1}, {z2}).")
        super().__init__(config, track_progress)
        self.z_pairs = [(complex(z1), complex(z2)) for z1, z2 in z_pairs]

    def points(self) -> list[complex]:
        return sorted({z for pair in self.z_pairs for z in pair}, key=lambda z: (z.real, z.imag))

    def _run(self) -> np.ndarray:
        points = self.points()
        items = [(spec, points) for spec in self.replica_specs()]
        return np.array(self.map_replicas(resolvent_traces, items))

    def _convert_result(self, result: np.ndarray, run_time: int) -> pd.DataFrame:
        index = {z: column for column, z in enumerate(self.points())}
        centered = result - np.mean(result, axis=0)
        scale = self.config.b / self.config.n / (result.shape[0] - 1)
        kappa4 = self.config.distribution.kappa4

        rows = []
        for z1, z2 in self.z_pairs:
            empirical = scale * np.sum(centered[:, index[z1]] * centered[:, index[z2]])
            theory = covariance_resolvents(z1, z2, self.config.profile, kappa4)
            rows.append((z1, z2, complex(empirical), complex(theory)))
        return pd.DataFrame(rows, columns=COVARIANCE_COLUMNS)


def covariance_experiment(
    config: ExperimentConfig, z_pairs: list[tuple[complex, complex]], track_progress: bool = False
) -> pd.DataFrame:
    return CovarianceExperiment(config, z_pairs, track_progress).run()
