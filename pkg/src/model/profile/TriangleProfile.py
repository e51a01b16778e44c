from fractions import Fraction

import numpy as np

from src.model.profile.BandProfile import BandProfile, ProfileFamily, irwin_hall_density

EXACT_MOMENT_ORDER = 40


class TriangleProfile(BandProfile):
    """
    Tent profile u(x) = (1 - |x|/r)_+ / r. Continuous everywhere.
    """

    family = ProfileFamily.TRIANGLE

    def value(self, x):
        x = np.asarray(x, dtype=float)
        result = np.maximum(1.0 - np.abs(x) / self.radius, 0.0) / self.radius
        return result if result.ndim else float(result)

    def fourier(self, k):
        k = np.asarray(k, dtype=float)
        result = np.sinc(self.radius * k / (2.0 * np.pi)) ** 2
        return result if result.ndim else float(result)

    def l2_norm_squared(self) -> float:
        return 2.0 / (3.0 * self.radius)

    def jump_points(self) -> list[float]:
        return []

    def fourier_decay(self) -> tuple[float, int]:
        return 4.0 / self.radius**2, 2

    def exact_convolution_moment(self, m: int) -> float | None:
        # the tent is the law of a sum of two uniforms on [-r/2, r/2]
        if 2 * m > EXACT_MOMENT_ORDER:
            return None
        return float(irwin_hall_density(2 * m, Fraction(m))) / self.radius
