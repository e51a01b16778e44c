from __future__ import annotations

import numpy as np

from src.errors import InvariantError
from src.model.VarianceBreakdown import VarianceBreakdown

DIAGNOSTIC_KEYS = ("skewness", "excess_kurtosis", "ks_statistic", "p_value")


class StatisticSummary:
    """
    Monte Carlo summary of one test function's fluctuations next to its limiting variance.

    Attributes:
        name (str): Name of the test function.
        sample_count (int): Number of fluctuation samples (the replica count).
        empirical_mean (float): Mean of the samples.
        empirical_variance (float): Bessel-corrected variance of the samples.
        diagnostics (dict | None): Skewness, excess kurtosis, KS statistic and p-value; None when
            there are too few or degenerate samples.
        char_function_grid (list[list[float]]): Pairs (t, |Z_R(t) - exp(-t^2 V / 2)|).
        theory (VarianceBreakdown): Limiting variance of the statistic.
        sobolev_norm (float | str): Norm of the test function, or a marker when it has none.
    """

    def __init__(
        self,
        name: str,
        sample_count: int,
        empirical_mean: float,
        empirical_variance: float,
        diagnostics: dict | None,
        char_function_grid: list,
        theory: VarianceBreakdown,
        sobolev_norm: float | str,
    ):
        self.name = name
        self.sample_count = int(sample_count)
        self.empirical_mean = float(empirical_mean)
        self.empirical_variance = float(empirical_variance)
        self.diagnostics = None if diagnostics is None else {key: float(diagnostics[key]) for key in DIAGNOSTIC_KEYS}
        self.char_function_grid = [[float(t), float(d)] for t, d in char_function_grid]
        self.theory = theory
        self.sobolev_norm = sobolev_norm

        values = [self.empirical_mean, self.empirical_variance]
        values += list(self.diagnostics.values()) if self.diagnostics else []
        values += [d for _, d in self.char_function_grid]
        if not np.all(np.isfinite(values)):
            raise InvariantError(f"Summary of {name} has non-finite statistics.")

    @property
    def relative_gap(self) -> float:
        if self.theory.total == 0:
            return float("inf") if self.empirical_variance else 0.0
        return abs(self.empirical_variance - self.theory.total) / self.theory.total

    @property
    def variance_stderr(self) -> float:
        """
        sqrt(2 / (R - 1)) V, the standard error of a normal sample variance.
        """
        return self.empirical_variance * float(np.sqrt(2.0 / (self.sample_count - 1)))

    def max_char_deviation(self) -> float:
        return max(d for _, d in self.char_function_grid)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "sample_count": self.sample_count,
            "empirical_mean": self.empirical_mean,
            "empirical_variance": self.empirical_variance,
            "diagnostics": self.diagnostics,
            "char_function_grid": self.char_function_grid,
            "theory": self.theory.to_dict(),
            "sobolev_norm": self.sobolev_norm,
        }

    @staticmethod
    def from_dict(data: dict) -> StatisticSummary:
        return StatisticSummary(
            data["name"],
            data["sample_count"],
            data["empirical_mean"],
            data["empirical_variance"],
            data["diagnostics"],
            data["char_function_grid"],
            VarianceBreakdown.from_dict(data["theory"]),
            data["sobolev_norm"],
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, StatisticSummary) and self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return (
            f"StatisticSummary(name={self.name}, empirical_variance={self.empirical_variance}, "
            f"theory={self.theory.total})"
        )
