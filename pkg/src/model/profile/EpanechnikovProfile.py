import numpy as np

from src.model.profile.BandProfile import BandProfile, ProfileFamily

SERIES_THRESHOLD = 1e-2


class EpanechnikovProfile(BandProfile):
    """
    Parabolic profile u(x) = 3/(4r) (1 - x^2/r^2) on [-r, r].
    """

    family = ProfileFamily.EPANECHNIKOV

    def value(self, x):
        x = np.asarray(x, dtype=float)
        t = x / self.radius
        result = np.where(np.abs(t) <= 1.0, 0.75 * (1.0 - t * t) / self.radius, 0.0)
        return result if result.ndim else float(result)

    def fourier(self, k):
        t = np.abs(np.asarray(k, dtype=float)) * self.radius
        small = t < SERIES_THRESHOLD
        safe = np.where(small, 1.0, t)
        closed = 3.0 * (np.sin(safe) - safe * np.cos(safe)) / safe**3
        t2 = t * t
        # 3 j_1(t) / t expanded at the origin
        series = 1.0 - t2 / 10.0 + t2 * t2 / 280.0 - t2**3 / 15120.0
        result = np.where(small, series, closed)
        return result if result.ndim else float(result)

    def l2_norm_squared(self) -> float:
        return 0.6 / self.radius

    def jump_points(self) -> list[float]:
        return []

    def fourier_decay(self) -> tuple[float, int]:
        return 3.0 / self.radius**2 + 3.0 / self.radius**3, 2
