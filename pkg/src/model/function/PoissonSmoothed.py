import numpy as np

from src.errors import ConfigError
from src.model.function.TestFunction import TestFunction, FunctionFamily


class PoissonSmoothed(TestFunction):
    """
    The convolution phi_eta = phi * P_eta of an integrable test function with the Poisson kernel.

    Attributes:
        base (TestFunction): The function being smoothed.
        eta (float): Width of the Poisson kernel.
        use_closed_form (bool): Evaluate through the base family's closed form when it has one,
            otherwise (or when False) by adaptive quadrature of the convolution.
    """

    family = FunctionFamily.POISSON_SMOOTHED

    def __init__(self, base: TestFunction, eta: float, use_closed_form: bool = True, name: str = None):
        if not eta > 0:
            raise ConfigError(f"Poisson smoothing needs eta > 0, got {eta}.")
        if not base.is_integrable:
            raise ConfigError(f"Cannot Poisson-smooth the non-integrable test function {base.name}.")

        self.base = base
        self.eta = float(eta)
        self.use_closed_form = use_closed_form
        super().__init__(name)

    def value(self, x: np.ndarray) -> np.ndarray:
        if self.use_closed_form:
            closed = self.base.smoothed_closed_form(self.eta, x)
            if closed is not None:
                return closed

        from src.statistics.smoothing import convolve_with_poisson

        return convolve_with_poisson(self.base, self.eta, x)

    @property
    def has_heavy_tails(self) -> bool:
        return True

    def effective_support(self) -> tuple[float, float]:
        lo, hi = self.base.effective_support()
        return lo - 10.0 * self.eta, hi + 10.0 * self.eta

    def default_name(self) -> str:
        return f"{self.base.name}*P({self.eta:g})"

    def parameters(self) -> dict:
        return {"base": self.base.to_dict(), "eta": self.eta}
