import numpy as np
from scipy import stats

from src.model.distribution.EntryDistribution import EntryDistribution, DistributionFamily


class RademacherEntries(EntryDistribution):
    """
    Symmetric signs, w = +-1 with probability 1/2 each.
    """

    family = DistributionFamily.RADEMACHER

    def build_law(self):
        return stats.rv_discrete(values=([-1, 1], [0.5, 0.5]))

    def fourth_cumulant(self) -> float:
        return -2.0

    def absolute_moment(self, order: float) -> float:
        return 1.0

    def from_uniform(self, uniforms: np.ndarray) -> np.ndarray:
        return np.where(uniforms < 0.5, -1.0, 1.0)

    def truncated_raw_moment(self, order: int, b: float) -> float:
        if b < 1.0 or order % 2 == 1:
            return 0.0
        return 1.0
