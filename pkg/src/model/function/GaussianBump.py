import numpy as np
from scipy import special

from src.errors import ConfigError
from src.model.function.TestFunction import TestFunction, FunctionFamily

SUPPORT_WIDTHS = 8.0


class GaussianBump(TestFunction):
    """
    phi(x) = amplitude * exp(-(x - center)^2 / (2 width^2)).
    """

    family = FunctionFamily.GAUSSIAN_BUMP

    def __init__(self, center: float = 0.0, width: float = 1.0, amplitude: float = 1.0, name: str = None):
        if not width > 0:
            raise ConfigError(f"Gaussian bump width must be positive, got {width}.")

        self.center = float(center)
        self.width = float(width)
        self.amplitude = float(amplitude)
        super().__init__(name)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self.amplitude * np.exp(-0.5 * ((x - self.center) / self.width) ** 2)

    def effective_support(self) -> tuple[float, float]:
        # exp(-32) is below 1.3e-14
        return self.center - SUPPORT_WIDTHS * self.width, self.center + SUPPORT_WIDTHS * self.width

    def smoothed_closed_form(self, eta: float, x: np.ndarray) -> np.ndarray:
        # Gaussian convolved with a Cauchy density is a Voigt profile
        scale = self.amplitude * self.width * np.sqrt(2.0 * np.pi)
        return scale * special.voigt_profile(x - self.center, self.width, eta)

    def default_name(self) -> str:
        return f"gauss({self.center:g},{self.width:g})"

    def parameters(self) -> dict:
        return {"center": self.center, "width": self.width, "amplitude": self.amplitude}
