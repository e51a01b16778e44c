from __future__ import annotations

import math
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate

from src.errors import ConfigError, ConvergenceError

NORMALIZATION_TOLERANCE = 1e-10
MOMENT_TAIL_TOLERANCE = 1e-15
MAX_MOMENT_PANELS = 200_000
PANEL_NODES = 32


def irwin_hall_density(m: int, x: Fraction) -> Fraction:
    """
    Exact density at x of the sum of m independent uniforms on [0, 1].
    """

    total = sum(
        (-1) ** k * math.comb(m, k) * (x - k) ** (m - 1) for k in range(math.floor(x) + 1)
    )
    return Fraction(total) / math.factorial(m - 1)


class ProfileFamily(str, Enum):
    BOX = "box"
    TRIANGLE = "triangle"
    EPANECHNIKOV = "epanechnikov"


class BandProfile(ABC):
    """
    Abstract band shape function u modulating the entry variances across the band.
    It is even, bounded, compactly supported on [-C*, C*] and integrates to one.

    Attributes:
        radius (float): Support radius C* of the profile.
        normalization (float): Quadrature value of the integral of u, checked against 1 on construction.
    """

    family: ProfileFamily

    def __init__(self, radius: float = 1.0):
        if not np.isfinite(radius) or radius <= 0:
            raise ConfigError(f"Profile radius must be positive, got {radius}.")

        self.radius = float(radius)
        self.normalization = self.integrate_profile()

        if abs(self.normalization - 1.0) > NORMALIZATION_TOLERANCE:
            raise ConfigError(
                f"Profile {self.family.value} integrates to {self.normalization}, not 1."
            )

    @property
    def support_radius(self) -> float:
        return self.radius

    @abstractmethod
    def value(self, x: np.ndarray | float) -> np.ndarray | float:
        """
        Evaluate u(x). Vectorized over numpy arrays.
        """
        pass

    @abstractmethod
    def fourier(self, k: np.ndarray | float) -> np.ndarray | float:
        """
        Closed-form transform u^(k) = int e^{ikx} u(x) dx, real by evenness.
        """
        pass

    @abstractmethod
    def l2_norm_squared(self) -> float:
        """
        The inner product (u, u) = int u(x)^2 dx.
        """
        pass

    @abstractmethod
    def jump_points(self) -> list[float]:
        """
        Points where u is discontinuous.
        """
        pass

    @abstractmethod
    def fourier_decay(self) -> tuple[float, int]:
        """
        Constants (C, p) of the tail bound |u^(k)| <= C / |k|^p.
        """
        pass

    def value_at_zero(self) -> float:
        return float(self.value(0.0))

    def integrate_profile(self) -> float:
        """
        Integral of u over its support by adaptive quadrature, splitting at 0 and at the jumps.
        """

        points = sorted({0.0, *[p for p in self.jump_points() if abs(p) < self.radius]})
        value, _ = integrate.quad(
            self.value,
            -self.radius,
            self.radius,
            points=points or None,
            epsabs=1e-13,
            epsrel=1e-13,
            limit=200,
        )
        return value

    def second_moment(self) -> float:
        """
        int x^2 u(x) dx.
        """

        value, _ = integrate.quad(
            lambda x: x * x * self.value(x), -self.radius, self.radius, points=[0.0], epsabs=1e-13, limit=200
        )
        return value

    @lru_cache(maxsize=None)
    def convolution_moment(self, m: int) -> float:
        """
        mu_m = (2 pi)^{-1} int u^(k)^m dk, which is the m-fold self-convolution of u at the origin.
        In particular mu_1 = u(0) and mu_2 = (u, u).
        """

        if m < 1:
            raise ConfigError(f"Convolution moments start at m = 1, got {m}.")
        if m == 1:
            return self.value_at_zero()
        if m == 2:
            return self.l2_norm_squared()

        exact = self.exact_convolution_moment(m)
        if exact is not None:
            return exact
        return self.fourier_power_integral(m)

    def exact_convolution_moment(self, m: int) -> float | None:
        return None

    def fourier_power_integral(self, m: int) -> float:
        """
        pi^{-1} int_0^K u^(k)^m dk by composite Gauss-Legendre, with K taken from the tail bound
        |u^(k)| <= C / k^p so that the neglected part stays below 1e-15.
        """

        constant, power = self.fourier_decay()
        exponent = power * m - 1
        cutoff = max(1.0, (constant**m / (np.pi * exponent * MOMENT_TAIL_TOLERANCE)) ** (1.0 / exponent))

        # panels narrow enough to resolve the central peak exp(-m sigma^2 k^2 / 2)
        panel = min(np.pi / self.radius, 2.0 / np.sqrt(m * self.second_moment()))
        panels = int(np.ceil(cutoff / panel))
        if panels > MAX_MOMENT_PANELS:
            raise ConvergenceError(
                f"Moment {m} of the {self.family.value} profile needs {panels} quadrature panels."
            )

        nodes, weights = np.polynomial.legendre.leggauss(PANEL_NODES)
        starts = panel * np.arange(panels)
        k = (starts[:, None] + 0.5 * panel * (nodes[None, :] + 1.0)).ravel()
        w = np.tile(0.5 * panel * weights, panels)
        return float(np.sum(w * self.fourier(k) ** m) / np.pi)

    def to_dict(self) -> dict:
        return {"family": self.family.value, "radius": self.radius}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BandProfile)
            and self.family == other.family
            and self.radius == other.radius
        )

    def __hash__(self) -> int:
        return hash((self.family, self.radius))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(radius={self.radius})"

    @staticmethod
    def from_dict(data: dict) -> BandProfile:
        """
        Build a profile from its config record. Only the named kernel families are accepted.
        """

        from src.model.profile.BoxProfile import BoxProfile
        from src.model.profile.EpanechnikovProfile import EpanechnikovProfile
        from src.model.profile.TriangleProfile import TriangleProfile

        families = {
            ProfileFamily.BOX: BoxProfile,
            ProfileFamily.TRIANGLE: TriangleProfile,
            ProfileFamily.EPANECHNIKOV: EpanechnikovProfile,
        }

        unknown = set(data) - {"family", "radius"}
        if unknown:
            raise ConfigError(f"Unknown profile keys: {sorted(unknown)}.")

        try:
            family = ProfileFamily(data["family"])
        except (KeyError, ValueError):
            raise ConfigError(
                f"Unsupported profile family {data.get('family')!r}; expected one of "
                f"{[f.value for f in ProfileFamily]}."
            )

        return families[family](float(data.get("radius", 1.0)))
