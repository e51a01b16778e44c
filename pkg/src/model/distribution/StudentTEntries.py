import numpy as np
from scipy import special, stats

from src.errors import ConfigError
from src.model.distribution.EntryDistribution import EntryDistribution, DistributionFamily


class StudentTEntries(EntryDistribution):
    """
    Student t entries with dof degrees of freedom, rescaled to unit variance.

    Attributes:
        dof (float): Degrees of freedom nu. Must exceed 4 + epsilon.
        scale (float): Standardizing factor sqrt((nu - 2) / nu).
    """

    family = DistributionFamily.STUDENT_T

    def __init__(self, dof: float, epsilon: float = None):
        if not np.isfinite(dof) or dof <= 4:
            raise ConfigError(f"student_t entries need dof > 4, got {dof}.")

        self.dof = float(dof)
        self.scale = float(np.sqrt((self.dof - 2.0) / self.dof))

        if epsilon is None:
            epsilon = (self.dof - 4.0) / 2.0
        if self.dof <= 4.0 + epsilon:
            raise ConfigError(
                f"student_t({self.dof}) has no finite moment of order {4.0 + epsilon}."
            )

        super().__init__(epsilon)

    def build_law(self):
        return stats.t(df=self.dof, scale=self.scale)

    def fourth_cumulant(self) -> float:
        return 6.0 / (self.dof - 4.0)

    def absolute_moment(self, order: float) -> float:
        nu = self.dof
        # E|T|^a = nu^{a/2} Gamma((a+1)/2) Gamma((nu-a)/2) / (sqrt(pi) Gamma(nu/2))
        log_moment = (
            0.5 * order * np.log(nu)
            + special.gammaln((order + 1) / 2)
            + special.gammaln((nu - order) / 2)
            - 0.5 * np.log(np.pi)
            - special.gammaln(nu / 2)
        )
        return float(self.scale**order * np.exp(log_moment))

    def from_uniform(self, uniforms: np.ndarray) -> np.ndarray:
        return self.scale * special.stdtrit(self.dof, uniforms)

    def to_dict(self) -> dict:
        return {"family": self.family.value, "dof": self.dof, "epsilon": self.epsilon}
