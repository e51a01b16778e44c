from typing import Callable, Iterable

import numpy as np
from scipy import integrate

from src.errors import ConfigError
from src.model.function.PoissonSmoothed import PoissonSmoothed
from src.model.function.TestFunction import TestFunction

DEFAULT_TOLERANCE = 1e-9
MAX_SUBINTERVALS = 500


def poisson_kernel(x: np.ndarray | float, eta: float) -> np.ndarray | float:
    """
    P_eta(x) = eta / (pi (x^2 + eta^2)).
    """

    if not eta > 0:
        raise ConfigError(f"Poisson kernel needs eta > 0, got {eta}.")
    value = eta / (np.pi * (np.asarray(x, dtype=np.float64) ** 2 + eta**2))
    return float(value) if value.ndim == 0 else value


def poisson_smooth(phi: TestFunction, eta: float, use_closed_form: bool = True) -> PoissonSmoothed:
    return PoissonSmoothed(phi, eta, use_closed_form=use_closed_form)


def integrate_real_line(
    fun: Callable[[float], float],
    lo: float,
    hi: float,
    heavy_tails: bool,
    points: Iterable[float] = (),
    tol: float = DEFAULT_TOLERANCE,
) -> float:
    """
    Adaptive Gauss-Kronrod integral of fun over [lo, hi], plus both infinite tails when heavy_tails.
    Breakpoints inside (lo, hi) are passed on to the quadrature.
    """

    inner = sorted({p for p in points if lo < p < hi})
    total, _ = integrate.quad(
        fun,
        lo,
        hi,
        points=inner or None,
        epsabs=tol,
        epsrel=tol,
        limit=max(MAX_SUBINTERVALS, 2 * len(inner) + 50),
    )

    if heavy_tails:
        left, _ = integrate.quad(fun, -np.inf, lo, epsabs=tol, epsrel=tol, limit=MAX_SUBINTERVALS)
        right, _ = integrate.quad(fun, hi, np.inf, epsabs=tol, epsrel=tol, limit=MAX_SUBINTERVALS)
        total += left + right

    return total


def convolve_with_poisson(phi: TestFunction, eta: float, x: np.ndarray | float) -> np.ndarray | float:
    """
    (phi * P_eta)(x) by adaptive quadrature, one integral per evaluation point.
    """

    lo, hi = phi.effective_support()
    center = 0.5 * (lo + hi)

    def smoothed_at(x0: float) -> float:
        a = min(lo, x0 - 50.0 * eta)
        b = max(hi, x0 + 50.0 * eta)
        points = (center, x0 - 10.0 * eta, x0 - eta, x0, x0 + eta, x0 + 10.0 * eta)
        return integrate_real_line(
            lambda y: phi(y) * eta / (np.pi * ((x0 - y) ** 2 + eta**2)),
            a,
            b,
            heavy_tails=phi.has_heavy_tails,
            points=points,
        )

    if np.ndim(x) == 0:
        return smoothed_at(float(x))
    return np.array([smoothed_at(float(x0)) for x0 in np.ravel(x)]).reshape(np.shape(x))
