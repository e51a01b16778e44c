import logging
from enum import Enum

import numpy as np

from src.errors import ConfigError, ConvergenceError
from src.model.function.TestFunction import TestFunction
from src.model.profile.BandProfile import BandProfile
from src.theory.profile_moments import fourier_rule, moment_sequence
from src.theory.semicircle import stieltjes_g, stieltjes_g_derivative

logger = logging.getLogger(__name__)

SERIES_TOLERANCE = 1e-16
SERIES_MARGIN = 10
MAX_SERIES_TERMS = 2000
IMAGINARY_TOLERANCE = 1e-10
QUADRATURE_TOLERANCE = 1e-10
QUADRATURE_ROWS = 2
PEAK_PANELS = 4
# largest |x| the series reaches SERIES_TOLERANCE at within MAX_SERIES_TERMS
SERIES_LIMIT = float(np.exp(np.log(SERIES_TOLERANCE) / (MAX_SERIES_TERMS - SERIES_MARGIN - 1)))

DEFAULT_PANELS_PER_ETA = 2
INITIAL_PANEL_NODES = 8
MAX_PANEL_NODES = 64
SMOOTHED_TOLERANCE = 1e-6
ROW_CHUNK = 128


class CovarianceMethod(str, Enum):
    SERIES = "series"
    QUADRATURE = "quadrature"


def _series_order(x_max: float) -> int:
    if x_max == 0:
        return 2
    order = int(np.ceil(np.log(SERIES_TOLERANCE) / np.log(x_max))) + SERIES_MARGIN
    if order > MAX_SERIES_TERMS:
        raise ConvergenceError(f"Covariance series at |g1 g2| = {x_max} needs {order} terms.")
    return max(order, 2)


def bracket_derivatives_series(x: np.ndarray, profile: BandProfile, kappa4: float) -> tuple[np.ndarray, np.ndarray]:
    """
    h'(x) and h''(x) for h(x) = 2 sum_m mu_m x^m / m - u(0) x + kappa4 x^2, the k-integrated bracket
    of the resolvent covariance as a function of x = g(z1) g(z2).
    """

    order = _series_order(float(np.max(np.abs(x))))
    mu = moment_sequence(profile, order)

    first = np.zeros_like(x)
    second = np.zeros_like(x)
    power = np.ones_like(x)  # x^{m-1}
    previous = np.zeros_like(x)  # x^{m-2}
    for m in range(1, order + 1):
        first += mu[m - 1] * power
        second += (m - 1) * mu[m - 1] * previous
        previous, power = power, power * x

    first = 2.0 * first - mu[0] + 2.0 * kappa4 * x
    second = 2.0 * second + 2.0 * kappa4
    return first, second


def covariance_bracket(
    z1: np.ndarray | complex, z2: np.ndarray | complex, profile: BandProfile, kappa4: float
) -> np.ndarray | complex:
    """
    The bracket h(g(z1) g(z2)) whose mixed derivative is C(z1, z2).
    """

    x = np.asarray(np.asarray(stieltjes_g(z1)) * np.asarray(stieltjes_g(z2)), dtype=np.complex128)
    order = _series_order(float(np.max(np.abs(x))))
    mu = moment_sequence(profile, order)

    total = np.zeros_like(x)
    power = np.array(x)
    for m in range(1, order + 1):
        total += mu[m - 1] * power / m
        power = power * x

    value = 2.0 * total - mu[0] * x + kappa4 * x * x
    return complex(value) if value.ndim == 0 else value


def bracket_derivatives_quadrature(
    x: np.ndarray, profile: BandProfile, kappa4: float
) -> tuple[np.ndarray, np.ndarray]:
    """
    h'(x) and h''(x) by k-quadrature of d/dx [-2 log(1 - x u^)] with the u^ and u^^2 parts
    integrated exactly: h' = u(0) + 2 (u, u) x + pi^{-1} int 2 x^2 u^3 / (1 - x u^) dk + 2 kappa4 x.

    Near |x| = 1 the integrand peaks at k = 0 with width of order ((1 - |x|) / int t^2 u)^{1/2}, and
    the inner panels are narrowed to resolve it.
    """

    x = np.asarray(x, dtype=np.complex128)
    x_max = float(np.max(np.abs(x)))
    if x_max >= 1:
        raise ConfigError(f"Covariance bracket needs |g1 g2| < 1, got {x_max}.")

    # on the tail |u^| <= 1/2 and |x| < 1, so |1 - x u^| >= 1/2
    prefactor = 24.0 / np.pi
    peak = np.sqrt(2.0 * (1.0 - x_max) / profile.second_moment())
    k, weights, _ = fourier_rule(profile, 3, prefactor, QUADRATURE_TOLERANCE, inner_width=peak / PEAK_PANELS)
    a = profile.fourier(k)

    xs = x.ravel()
    first_rest = np.empty_like(xs)
    second_rest = np.empty_like(xs)
    for start in range(0, xs.size, QUADRATURE_ROWS):
        rows = slice(start, start + QUADRATURE_ROWS)
        block = xs[rows, None]
        denominator = 1.0 - block * a[None, :]
        first_rest[rows] = (2.0 * block**2 * a**3 / denominator) @ weights / np.pi
        second_rest[rows] = (4.0 * block * a**3 / denominator + 2.0 * block**2 * a**4 / denominator**2) @ weights / np.pi

    mu1, mu2 = profile.convolution_moment(1), profile.convolution_moment(2)
    first = mu1 + 2.0 * mu2 * x + first_rest.reshape(x.shape) + 2.0 * kappa4 * x
    second = 2.0 * mu2 + second_rest.reshape(x.shape) + 2.0 * kappa4
    return first, second


def covariance_resolvents(
    z1: np.ndarray | complex,
    z2: np.ndarray | complex,
    profile: BandProfile,
    kappa4: float,
    method: CovarianceMethod = CovarianceMethod.SERIES,
) -> np.ndarray | complex:
    """
    The limiting covariance C(z1, z2) of (b / n)^{1/2} Tr(M - z)^{-1} at two spectral points:
    d^2/dz1 dz2 of h(g(z1) g(z2)), that is g'(z1) g'(z2) (h''(x) x + h'(x)) at x = g(z1) g(z2).
    Vectorized over broadcastable arrays of z1 and z2.

    The series method hands points with |x| above SERIES_LIMIT to the quadrature.
    """

    g1, g2 = np.asarray(stieltjes_g(z1)), np.asarray(stieltjes_g(z2))
    x = np.asarray(g1 * g2, dtype=np.complex128)

    if np.any(np.abs(x) >= 1):
        raise ConfigError(f"Covariance needs |g(z1) g(z2)| < 1, got {np.max(np.abs(x))}.")

    if CovarianceMethod(method) == CovarianceMethod.SERIES:
        flat = x.ravel()
        near = np.abs(flat) > SERIES_LIMIT
        first = np.empty_like(flat)
        second = np.empty_like(flat)
        if np.any(~near):
            first[~near], second[~near] = bracket_derivatives_series(flat[~near], profile, kappa4)
        if np.any(near):
            logger.debug(f"Covariance series falls back to quadrature at {int(near.sum())} points")
            first[near], second[near] = bracket_derivatives_quadrature(flat[near], profile, kappa4)
        first, second = first.reshape(x.shape), second.reshape(x.shape)
    else:
        first, second = bracket_derivatives_quadrature(x, profile, kappa4)

    d1, d2 = np.asarray(stieltjes_g_derivative(z1)), np.asarray(stieltjes_g_derivative(z2))
    value = d1 * d2 * (second * x + first)
    return complex(value) if value.ndim == 0 else value


def covariance_eta(
    lambda1: np.ndarray | float, lambda2: np.ndarray | float, eta: float, profile: BandProfile, kappa4: float
) -> np.ndarray | float:
    """
    C_eta(l1, l2) = (4 pi^2)^{-1} [C(l1 + i eta, l2 - i eta) + C(l1 - i eta, l2 + i eta)
    - C(l1 + i eta, l2 + i eta) - C(l1 - i eta, l2 - i eta)], real by conjugate pairing.
    """

    if not eta > 0:
        raise ConfigError(f"Smoothing width eta must be positive, got {eta}.")

    lambda1, lambda2 = np.asarray(lambda1, dtype=np.float64), np.asarray(lambda2, dtype=np.float64)
    up1, down1 = lambda1 + 1j * eta, lambda1 - 1j * eta
    up2, down2 = lambda2 + 1j * eta, lambda2 - 1j * eta

    combination = (
        covariance_resolvents(up1, down2, profile, kappa4)
        + covariance_resolvents(down1, up2, profile, kappa4)
        - covariance_resolvents(up1, up2, profile, kappa4)
        - covariance_resolvents(down1, down2, profile, kappa4)
    ) / (4.0 * np.pi**2)

    combination = np.asarray(combination)
    imaginary = float(np.max(np.abs(combination.imag)))
    if imaginary > IMAGINARY_TOLERANCE:
        logger.warning(f"C_eta has imaginary part {imaginary} at eta={eta}")

    real = combination.real
    return float(real) if real.ndim == 0 else real


def _composite_rule(lo: float, hi: float, panel: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    panels = max(int(np.ceil((hi - lo) / panel)), 1)
    edges = np.linspace(lo, hi, panels + 1)
    t, w = np.polynomial.legendre.leggauss(nodes)
    left, right = edges[:-1, None], edges[1:, None]
    points = (0.5 * (left + right) + 0.5 * (right - left) * t[None, :]).ravel()
    weights = (0.5 * (right - left) * w[None, :]).ravel()
    return points, weights


def _smoothed_at(phi: TestFunction, eta: float, profile: BandProfile, kappa4: float, nodes: int) -> float:
    lo, hi = phi.effective_support()
    points, weights = _composite_rule(lo, hi, eta / DEFAULT_PANELS_PER_ETA, nodes)
    values = weights * phi(points)

    total = 0.0
    for start in range(0, points.size, ROW_CHUNK):
        rows = slice(start, start + ROW_CHUNK)
        block = covariance_eta(points[rows, None], points[None, :], eta, profile, kappa4)
        total += values[rows] @ block @ values
    return float(total)


def smoothed_variance(phi: TestFunction, eta: float, profile: BandProfile, kappa4: float) -> float:
    """
    int int phi(l1) phi(l2) C_eta(l1, l2) dl1 dl2, the limiting variance of the statistic of the
    Poisson-smoothed phi_eta. Composite Gauss-Legendre in both variables over the effective
    support of phi, panels of width eta / 2, nodes per panel doubled until two levels agree.
    """

    if not eta > 0:
        raise ConfigError(f"Smoothing width eta must be positive, got {eta}.")
    if not phi.is_integrable or phi.has_heavy_tails:
        raise ConfigError(f"Smoothed variance needs a compactly concentrated test function, got {phi.name}.")

    nodes = INITIAL_PANEL_NODES
    current = _smoothed_at(phi, eta, profile, kappa4, nodes)
    while nodes < MAX_PANEL_NODES:
        nodes *= 2
        refined = _smoothed_at(phi, eta, profile, kappa4, nodes)
        if abs(refined - current) <= SMOOTHED_TOLERANCE * max(abs(refined), 1e-12):
            logger.debug(f"Smoothed variance of {phi.name} at eta={eta} converged with {nodes} nodes per panel")
            return refined
        current = refined

    raise ConvergenceError(f"Smoothed variance of {phi.name} at eta={eta} did not converge.")


def extrapolated_variance(phi: TestFunction, eta: float, profile: BandProfile, kappa4: float) -> float:
    """
    Linear extrapolation to eta = 0 from the smoothed variances at eta and 2 eta.
    """
    return 2.0 * smoothed_variance(phi, eta, profile, kappa4) - smoothed_variance(phi, 2.0 * eta, profile, kappa4)
