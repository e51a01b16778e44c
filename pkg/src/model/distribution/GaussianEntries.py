import numpy as np
from scipy import special, stats

from src.model.distribution.EntryDistribution import EntryDistribution, DistributionFamily


class GaussianEntries(EntryDistribution):
    """
    Standard normal entries.
    """

    family = DistributionFamily.GAUSSIAN

    def build_law(self):
        return stats.norm()

    def fourth_cumulant(self) -> float:
        return 0.0

    def absolute_moment(self, order: float) -> float:
        return float(2 ** (order / 2) * special.gamma((order + 1) / 2) / np.sqrt(np.pi))

    def from_uniform(self, uniforms: np.ndarray) -> np.ndarray:
        return special.ndtri(uniforms)
