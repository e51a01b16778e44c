from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum

import numpy as np
from scipy import integrate

from src.errors import ConfigError

DEFAULT_EPSILON = 4.0
QUADRATURE_TOLERANCE = 1e-12


class DistributionFamily(str, Enum):
    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"
    UNIFORM = "uniform"
    STUDENT_T = "student_t"


class EntryDistribution(ABC):
    """
    Abstract law of the standardized entries w~_ij: mean 0, variance 1, E w^4 = 3 + kappa4 and a finite
    (4 + epsilon)-th absolute moment.

    Attributes:
        epsilon (float): Exponent excess of the moment condition E|w|^(4+epsilon) <= C.
        kappa4 (float): Excess of the fourth moment over 3.
        moment_bound (float): The constant C, i.e. the (4+epsilon)-th absolute moment itself.
        law: Frozen scipy.stats distribution carrying pdf/cdf/ppf of the standardized law.
    """

    family: DistributionFamily

    def __init__(self, epsilon: float = DEFAULT_EPSILON):
        if not np.isfinite(epsilon) or epsilon <= 0:
            raise ConfigError(f"Moment exponent excess epsilon must be positive, got {epsilon}.")

        self.epsilon = float(epsilon)
        self.law = self.build_law()
        self.kappa4 = self.fourth_cumulant()
        self.moment_bound = self.absolute_moment(4.0 + self.epsilon)

    @abstractmethod
    def build_law(self):
        """
        Frozen scipy.stats distribution of the standardized entry.
        """
        pass

    @abstractmethod
    def fourth_cumulant(self) -> float:
        """
        Closed form of kappa4 = E w^4 - 3.
        """
        pass

    @abstractmethod
    def absolute_moment(self, order: float) -> float:
        """
        E|w|^order.
        """
        pass

    @property
    def is_symmetric(self) -> bool:
        return True

    def from_uniform(self, uniforms: np.ndarray) -> np.ndarray:
        """
        Map uniforms in (0, 1) to entries by the inverse distribution function.
        """
        return self.law.ppf(uniforms)

    def truncated_mean(self, b: float) -> float:
        """
        E{w 1_{|w| <= sqrt(b)}}. Zero for symmetric laws, quadrature otherwise.
        """

        if self.is_symmetric:
            return 0.0
        return self.truncated_mean_by_quadrature(b)

    def truncated_mean_by_quadrature(self, b: float) -> float:
        return self.truncated_raw_moment(1, b)

    def truncated_raw_moment(self, order: int, b: float) -> float:
        """
        E{w^order 1_{|w| <= sqrt(b)}} by adaptive quadrature of the density.
        """

        cutoff = np.sqrt(b)
        value, _ = integrate.quad(
            lambda x: x**order * self.law.pdf(x),
            -cutoff,
            cutoff,
            epsabs=QUADRATURE_TOLERANCE,
            epsrel=QUADRATURE_TOLERANCE,
            limit=200,
        )
        return value

    def to_dict(self) -> dict:
        return {"family": self.family.value, "epsilon": self.epsilon}

    def __eq__(self, other) -> bool:
        return isinstance(other, EntryDistribution) and self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_dict()})"

    @staticmethod
    def from_dict(data: dict) -> EntryDistribution:
        """
        Build an entry law from its config record.
        """

        from src.model.distribution.GaussianEntries import GaussianEntries
        from src.model.distribution.RademacherEntries import RademacherEntries
        from src.model.distribution.StudentTEntries import StudentTEntries
        from src.model.distribution.UniformEntries import UniformEntries

        try:
            family = DistributionFamily(data["family"])
        except (KeyError, ValueError):
            raise ConfigError(
                f"Unsupported entry distribution {data.get('family')!r}; expected one of "
                f"{[f.value for f in DistributionFamily]}."
            )

        allowed = {"family", "epsilon"}
        if family == DistributionFamily.STUDENT_T:
            allowed.add("dof")
        unknown = set(data) - allowed
        if unknown:
            raise ConfigError(f"Unknown keys for {family.value} entries: {sorted(unknown)}.")

        kwargs = {}
        if "epsilon" in data:
            kwargs["epsilon"] = float(data["epsilon"])

        if family == DistributionFamily.STUDENT_T:
            if "dof" not in data:
                raise ConfigError("student_t entries need the degrees of freedom 'dof'.")
            return StudentTEntries(float(data["dof"]), **kwargs)

        classes = {
            DistributionFamily.GAUSSIAN: GaussianEntries,
            DistributionFamily.RADEMACHER: RademacherEntries,
            DistributionFamily.UNIFORM: UniformEntries,
        }
        return classes[family](**kwargs)
