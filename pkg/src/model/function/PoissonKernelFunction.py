import numpy as np

from src.errors import ConfigError
from src.model.function.TestFunction import TestFunction, FunctionFamily


class PoissonKernelFunction(TestFunction):
    """
    phi(x) = P_eta(x - center) = eta / (pi ((x - center)^2 + eta^2)).
    """

    family = FunctionFamily.POISSON_KERNEL

    def __init__(self, eta: float, center: float = 0.0, name: str = None):
        if not eta > 0:
            raise ConfigError(f"Poisson kernel width must be positive, got eta={eta}.")

        self.eta = float(eta)
        self.center = float(center)
        super().__init__(name)

    def value(self, x: np.ndarray) -> np.ndarray:
        shifted = x - self.center
        return self.eta / (np.pi * (shifted**2 + self.eta**2))

    @property
    def has_heavy_tails(self) -> bool:
        return True

    def effective_support(self) -> tuple[float, float]:
        # the tails are integrated separately, this is just where the mass concentrates
        return self.center - 50.0 * self.eta, self.center + 50.0 * self.eta

    def smoothed_closed_form(self, eta: float, x: np.ndarray) -> np.ndarray:
        total = self.eta + eta
        shifted = x - self.center
        return total / (np.pi * (shifted**2 + total**2))

    def default_name(self) -> str:
        return f"poisson({self.eta:g})"

    def parameters(self) -> dict:
        return {"eta": self.eta, "center": self.center}
