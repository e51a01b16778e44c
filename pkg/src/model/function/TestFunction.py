from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum

import numpy as np

from src.errors import ConfigError


class FunctionFamily(str, Enum):
    POLYNOMIAL = "polynomial"
    GAUSSIAN_BUMP = "gaussian_bump"
    SMOOTH_BUMP = "smooth_bump"
    POISSON_KERNEL = "poisson_kernel"
    POISSON_SMOOTHED = "poisson_smoothed"


class TestFunction(ABC):
    """
    Abstract test function phi of a linear eigenvalue statistic sum_j phi(lambda_j).

    Attributes:
        name (str): Label used in reports and tables.
    """

    family: FunctionFamily

    # not a test case
    __test__ = False

    def __init__(self, name: str = None):
        self.name = name or self.default_name()

    @abstractmethod
    def value(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate phi elementwise on an array.
        """
        pass

    @abstractmethod
    def effective_support(self) -> tuple[float, float]:
        """
        Interval outside which phi vanishes, or is negligible against a 1e-12 absolute tolerance.
        """
        pass

    @abstractmethod
    def parameters(self) -> dict:
        pass

    @property
    def is_integrable(self) -> bool:
        return True

    @property
    def has_heavy_tails(self) -> bool:
        """
        Whether the mass outside the effective support must be integrated explicitly.
        """
        return False

    def smoothed_closed_form(self, eta: float, x: np.ndarray) -> np.ndarray | None:
        """
        Closed form of the Poisson-smoothed function, when the family has one.
        """
        return None

    def default_name(self) -> str:
        return self.family.value

    def __call__(self, x: np.ndarray | float) -> np.ndarray | float:
        values = self.value(np.asarray(x, dtype=np.float64))
        if np.ndim(x) == 0:
            return float(values)
        return values

    def to_dict(self) -> dict:
        return {"family": self.family.value, "name": self.name, **self.parameters()}

    def __eq__(self, other) -> bool:
        return isinstance(other, TestFunction) and self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(repr(self.to_dict()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.parameters()})"

    @staticmethod
    def from_dict(data: dict) -> TestFunction:
        """
        Build a test function from its config record.
        """

        from src.model.function.GaussianBump import GaussianBump
        from src.model.function.PoissonKernelFunction import PoissonKernelFunction
        from src.model.function.PoissonSmoothed import PoissonSmoothed
        from src.model.function.PolynomialFunction import PolynomialFunction
        from src.model.function.SmoothBump import SmoothBump

        try:
            family = FunctionFamily(data["family"])
        except (KeyError, ValueError):
            raise ConfigError(
                f"Unsupported test function {data.get('family')!r}; expected one of "
                f"{[f.value for f in FunctionFamily]}."
            )

        fields = {
            FunctionFamily.POLYNOMIAL: {"coefficients"},
            FunctionFamily.GAUSSIAN_BUMP: {"center", "width", "amplitude"},
            FunctionFamily.SMOOTH_BUMP: {"center", "width", "amplitude"},
            FunctionFamily.POISSON_KERNEL: {"eta", "center"},
            FunctionFamily.POISSON_SMOOTHED: {"base", "eta"},
        }[family]

        kwargs = {key: value for key, value in data.items() if key not in ("family", "name")}
        unknown = set(kwargs) - fields
        if unknown:
            raise ConfigError(f"Unknown keys for {family.value} test function: {sorted(unknown)}.")

        name = data.get("name")
        if family == FunctionFamily.POLYNOMIAL:
            if "coefficients" not in kwargs:
                raise ConfigError("A polynomial test function needs 'coefficients'.")
            return PolynomialFunction(kwargs["coefficients"], name=name)
        if family == FunctionFamily.GAUSSIAN_BUMP:
            return GaussianBump(**kwargs, name=name)
        if family == FunctionFamily.SMOOTH_BUMP:
            return SmoothBump(**kwargs, name=name)
        if family == FunctionFamily.POISSON_KERNEL:
            if "eta" not in kwargs:
                raise ConfigError("A poisson_kernel test function needs 'eta'.")
            return PoissonKernelFunction(**kwargs, name=name)

        if "base" not in kwargs or "eta" not in kwargs:
            raise ConfigError("A poisson_smoothed test function needs 'base' and 'eta'.")
        return PoissonSmoothed(TestFunction.from_dict(kwargs["base"]), kwargs["eta"], name=name)
