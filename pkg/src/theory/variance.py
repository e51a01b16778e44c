import logging
from functools import lru_cache

import numpy as np

from src.errors import ConfigError, ConvergenceError
from src.model.BandMatrixSpec import half_bandwidth
from src.model.VarianceBreakdown import VarianceBreakdown
from src.model.function.PolynomialFunction import PolynomialFunction
from src.model.function.TestFunction import TestFunction
from src.model.profile.BandProfile import BandProfile
from src.theory.profile_moments import fourier_rule, profile_convolution_moment

logger = logging.getLogger(__name__)

KERNEL_TAIL_TOLERANCE = 1e-9
# sum_{m >= 3} m |a|^m <= 8 |a|^3 for |a| <= 1/2, twice for the two angles, over pi
REMAINDER_PREFACTOR = 16.0 / np.pi
SINGULARITY_TOLERANCE = 1e-12

INITIAL_NODES = 64
MAX_NODES = 2**15
HARMONICS_PER_NODE = 8
COSINE_TOLERANCE = 1e-7
SERIES_TAIL_TOLERANCE = 1e-12
NEGLIGIBLE_TERM = 1e-16
MIN_KAPPA4 = -2.0


@lru_cache(maxsize=32)
def _kernel_rule(profile: BandProfile) -> tuple[np.ndarray, np.ndarray, float]:
    k, weights, radius = fourier_rule(profile, 3, REMAINDER_PREFACTOR, KERNEL_TAIL_TOLERANCE)
    return k, weights, radius


def kernel_truncation_radius(profile: BandProfile) -> float:
    """
    Radius K beyond which the k-integral of the variance kernel is dropped.
    """
    return _kernel_rule(profile)[2]


def _check_angles(x: float, y: float):
    if not (0 < x < np.pi and 0 < y < np.pi):
        raise ConfigError(f"Kernel angles must lie in (0, pi), got x={x}, y={y}.")


def _second_derivative(theta: float, a: np.ndarray) -> np.ndarray:
    """
    f''(theta; a) for f(theta; a) = log|1 - a e^{i theta}|.
    """

    cosine = np.cos(theta)
    denominator = 1.0 - 2.0 * a * cosine + a * a
    if np.min(denominator) < SINGULARITY_TOLERANCE:
        raise ConvergenceError(f"Variance kernel is near-singular at angle {theta}: 1 - 2a cos + a^2 < 1e-12.")
    return (a * cosine * denominator - 2.0 * a * a * np.sin(theta) ** 2) / denominator**2


def _log_remainder(theta: float, a: np.ndarray) -> np.ndarray:
    # f(theta; a) minus its terms of order a and a^2
    denominator = 1.0 - 2.0 * a * np.cos(theta) + a * a
    if np.min(denominator) < SINGULARITY_TOLERANCE:
        raise ConvergenceError(f"Log-modulus is near-singular at angle {theta}.")
    return 0.5 * np.log(denominator) + a * np.cos(theta) + 0.5 * a * a * np.cos(2.0 * theta)


def variance_kernel(x: float, y: float, profile: BandProfile) -> float:
    """
    (2 pi)^{-1} int d^2/dx dy log|(1 - u^(k) e^{i(x+y)}) / (1 - u^(k) e^{i(x-y)})| dk.

    The integrand is f''(x+y; u^) + f''(x-y; u^). Its parts linear and quadratic in u^ integrate
    to 2 u(0) cos x cos y + 4 (u, u) cos 2x cos 2y; the cubic remainder goes through a fixed
    Gauss-Legendre rule on [0, K].
    """

    _check_angles(x, y)
    k, weights, _ = _kernel_rule(profile)
    a = profile.fourier(k)

    remainder = 0.0
    for theta in (x + y, x - y):
        exact = _second_derivative(theta, a)
        low_order = a * np.cos(theta) + 2.0 * a * a * np.cos(2.0 * theta)
        remainder += np.sum(weights * (exact - low_order))

    mu1, mu2 = profile.convolution_moment(1), profile.convolution_moment(2)
    analytic = 2.0 * mu1 * np.cos(x) * np.cos(y) + 4.0 * mu2 * np.cos(2.0 * x) * np.cos(2.0 * y)
    return float(analytic + remainder / np.pi)


def log_modulus(x: float, y: float, profile: BandProfile) -> float:
    """
    (2 pi)^{-1} int log|(1 - u^(k) e^{i(x+y)}) / (1 - u^(k) e^{i(x-y)})| dk on the same k-rule as
    variance_kernel, so its mixed finite differences converge to the kernel.
    """

    k, weights, _ = _kernel_rule(profile)
    a = profile.fourier(k)

    remainder = np.sum(weights * (_log_remainder(x + y, a) - _log_remainder(x - y, a)))
    mu1, mu2 = profile.convolution_moment(1), profile.convolution_moment(2)
    analytic = mu1 * (np.cos(x - y) - np.cos(x + y)) + 0.5 * mu2 * (np.cos(2 * (x - y)) - np.cos(2 * (x + y)))
    return float(analytic + remainder / np.pi)


def cosine_moments(phi: TestFunction, count: int, nodes: int) -> np.ndarray:
    """
    c_m = int_0^pi phi(2 cos x) cos(m x) dx for m = 1..count, by Gauss-Legendre with the given
    number of nodes. The nodes are interior to (0, pi).
    """

    t, w = np.polynomial.legendre.leggauss(nodes)
    x = 0.5 * np.pi * (t + 1.0)
    w = 0.5 * np.pi * w

    values = np.asarray(phi(2.0 * np.cos(x)), dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise ConfigError(f"Test function {phi.name} is not finite on [-2, 2].")

    m = np.arange(1, count + 1)
    return np.cos(np.outer(m, x)) @ (w * values)


def polynomial_cosine_moments(phi: PolynomialFunction) -> np.ndarray:
    """
    Exact c_m of a polynomial: phi(2 cos x) = sum_m a_m cos(m x) from the Chebyshev series of
    phi(2 t), so c_m = pi a_m / 2. Padded to at least two harmonics.
    """

    scaled = np.asarray(phi.coefficients) * 2.0 ** np.arange(len(phi.coefficients))
    series = np.polynomial.chebyshev.poly2cheb(scaled)
    c = np.zeros(max(series.size - 1, 2))
    c[: series.size - 1] = 0.5 * np.pi * series[1:]
    return c


def _converged_cosine_moments(phi: TestFunction, profile: BandProfile) -> np.ndarray:
    if isinstance(phi, PolynomialFunction):
        return polynomial_cosine_moments(phi)

    # terms 2 m mu_m c_m^2 are bounded by 2 m u(0) c_m^2 since mu_m <= sup u = u(0)
    bound = profile.value_at_zero()
    grid = np.linspace(-2.0, 2.0, 257)
    floor = 1e-13 * np.pi * max(1.0, float(np.max(np.abs(phi(grid)))))
    nodes = INITIAL_NODES

    while nodes <= MAX_NODES:
        count = nodes // HARMONICS_PER_NODE
        coarse = cosine_moments(phi, count, nodes)
        fine = cosine_moments(phi, count, 2 * nodes)

        gap = np.max(np.abs(fine - coarse))
        agree = gap <= max(COSINE_TOLERANCE * np.max(np.abs(fine)), floor)
        m = np.arange(1, count + 1)
        tail = np.sum((2.0 * m * bound * fine**2)[3 * count // 4 :]) / np.pi**2
        if agree and tail < SERIES_TAIL_TOLERANCE:
            logger.debug(f"Cosine moments of {phi.name} converged with {2 * nodes} nodes, {count} harmonics")
            return fine

        nodes *= 2

    raise ConvergenceError(
        f"Cosine moments of {phi.name} did not converge within {MAX_NODES} quadrature nodes."
    )


def clt_variance(phi: TestFunction, profile: BandProfile, kappa4: float) -> VarianceBreakdown:
    """
    Limiting variance of sqrt(b / n) times the centered statistic of phi.

    The kernel double integral over (0, pi)^2 is evaluated through the cosine expansion
    K(x, y) = sum_m 2 m mu_m cos(mx) cos(my), giving pi^{-2} sum_m 2 m mu_m c_m^2.
    """

    if not np.isfinite(kappa4) or kappa4 < MIN_KAPPA4:
        raise ConfigError(f"Fourth cumulant must be at least {MIN_KAPPA4}, got {kappa4}.")

    c = _converged_cosine_moments(phi, profile)

    kernel_term = 0.0
    order = 0
    bound = profile.value_at_zero()
    for m, cm in enumerate(c, start=1):
        if 2.0 * m * bound * cm * cm < NEGLIGIBLE_TERM:
            continue
        kernel_term += 2.0 * m * profile_convolution_moment(profile, m) * cm * cm
        order = m
    kernel_term /= np.pi**2

    kappa4_term = profile.l2_norm_squared() * kappa4 * c[1] ** 2 / np.pi**2
    u0_term = profile.value_at_zero() * c[0] ** 2 / (2.0 * np.pi**2)

    breakdown = VarianceBreakdown(kernel_term, kappa4_term, u0_term, truncation_order=order)
    logger.info(f"Limiting variance of {phi.name} for the {profile.family.value} profile: {breakdown.total}")
    return breakdown


def exact_trace_variance(n: int, b: float, profile: BandProfile, kappa4: float, power: int) -> float:
    """
    Exact variance of sqrt(b / n) Tr M^power for power 1 or 2, straight from the entry moments
    (unit variance and fourth cumulant kappa4 on every entry, truncation ignored).
    """

    if power == 1:
        return profile.value_at_zero()
    if power != 2:
        raise ConfigError(f"Exact trace variance is available for powers 1 and 2, got {power}.")

    w = half_bandwidth(profile, b)
    d = np.arange(1, w + 1)
    squares = n * profile.value_at_zero() ** 2 + 4.0 * np.sum((n - d) * profile.value(d / b) ** 2)
    return float((b / n) * (2.0 + kappa4) * squares / b**2)
