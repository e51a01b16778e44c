import numpy as np
from scipy import stats

from src.model.distribution.EntryDistribution import EntryDistribution, DistributionFamily

HALF_WIDTH = np.sqrt(3.0)


class UniformEntries(EntryDistribution):
    """
    Entries uniform on [-sqrt(3), sqrt(3)].
    """

    family = DistributionFamily.UNIFORM

    def build_law(self):
        return stats.uniform(loc=-HALF_WIDTH, scale=2 * HALF_WIDTH)

    def fourth_cumulant(self) -> float:
        return 9.0 / 5.0 - 3.0

    def absolute_moment(self, order: float) -> float:
        return float(HALF_WIDTH**order / (order + 1))

    def from_uniform(self, uniforms: np.ndarray) -> np.ndarray:
        return HALF_WIDTH * (2.0 * uniforms - 1.0)
