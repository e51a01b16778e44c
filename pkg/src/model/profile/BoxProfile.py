from fractions import Fraction

import numpy as np

from src.model.profile.BandProfile import BandProfile, ProfileFamily, irwin_hall_density

EXACT_MOMENT_ORDER = 40


class BoxProfile(BandProfile):
    """
    Flat profile u(x) = 1/(2r) on [-r, r], jumping to zero at the edges.
    """

    family = ProfileFamily.BOX

    def value(self, x):
        x = np.asarray(x, dtype=float)
        result = np.where(np.abs(x) <= self.radius, 0.5 / self.radius, 0.0)
        return result if result.ndim else float(result)

    def fourier(self, k):
        k = np.asarray(k, dtype=float)
        # numpy's sinc is sin(pi t) / (pi t)
        result = np.sinc(self.radius * k / np.pi)
        return result if result.ndim else float(result)

    def l2_norm_squared(self) -> float:
        return 0.5 / self.radius

    def jump_points(self) -> list[float]:
        return [-self.radius, self.radius]

    def fourier_decay(self) -> tuple[float, int]:
        return 1.0 / self.radius, 1

    def exact_convolution_moment(self, m: int) -> float | None:
        # sum of m uniforms on [-r, r], i.e. 2r (IrwinHall_m - m/2)
        if m > EXACT_MOMENT_ORDER:
            return None
        return float(irwin_hall_density(m, Fraction(m, 2))) / (2.0 * self.radius)
