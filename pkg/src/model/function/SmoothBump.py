import numpy as np

from src.errors import ConfigError
from src.model.function.TestFunction import TestFunction, FunctionFamily


class SmoothBump(TestFunction):
    """
    Compactly supported C-infinity bump, amplitude * e * exp(-1 / (1 - t^2)) for |t| < 1 with
    t = (x - center) / width, so that its peak value equals the amplitude.
    """

    family = FunctionFamily.SMOOTH_BUMP

    def __init__(self, center: float = 0.0, width: float = 1.0, amplitude: float = 1.0, name: str = None):
        if not width > 0:
            raise ConfigError(f"Smooth bump width must be positive, got {width}.")

        self.center = float(center)
        self.width = float(width)
        self.amplitude = float(amplitude)
        super().__init__(name)

    def value(self, x: np.ndarray) -> np.ndarray:
        t = (np.asarray(x) - self.center) / self.width
        inside = np.abs(t) < 1.0
        safe = np.where(inside, t, 0.0)
        return np.where(inside, self.amplitude * np.exp(1.0 - 1.0 / (1.0 - safe**2)), 0.0)

    def effective_support(self) -> tuple[float, float]:
        return self.center - self.width, self.center + self.width

    def default_name(self) -> str:
        return f"bump({self.center:g},{self.width:g})"

    def parameters(self) -> dict:
        return {"center": self.center, "width": self.width, "amplitude": self.amplitude}
