import logging
from typing import Callable

import numpy as np

from src.bandeig.eigen_functions import dense_eigenvalues, eigenvalues
from src.model.BandMatrix import BandMatrix
from src.model.function.GaussianBump import GaussianBump
from src.model.function.PolynomialFunction import PolynomialFunction
from src.model.profile.BoxProfile import BoxProfile
from src.model.profile.EpanechnikovProfile import EpanechnikovProfile
from src.model.profile.TriangleProfile import TriangleProfile
from src.model.Spectrum import Spectrum
from src.montecarlo.diagnostics import char_function_compare, normality_tests
from src.statistics.linear_statistics import evaluate_les, resolvent_les
from src.statistics.smoothing import poisson_smooth
from src.theory.covariance import CovarianceMethod, covariance_bracket, covariance_resolvents
from src.theory.semicircle import stieltjes_g, stieltjes_g_derivative
from src.theory.variance import clt_variance, log_modulus, variance_kernel

logger = logging.getLogger(__name__)

ORACLE_SEED = 7
COMPLEX_STEP = 1e-20
KERNEL_STEP = 1e-4
BRACKET_STEP = 1e-3


def _relative_error(actual, expected, floor: float = 1e-300) -> float:
    return float(np.max(np.abs(np.asarray(actual) - np.asarray(expected)) / np.maximum(np.abs(expected), floor)))


def eigensolver_equivalence(count: int = 200, max_size: int = 64, max_half_bandwidth: int = 8) -> tuple[bool, str]:
    """
    Banded pipeline against LAPACK on random symmetric band matrices.
    """

    rng = np.random.default_rng(ORACLE_SEED)
    worst = 0.0
    for _ in range(count):
        n = int(rng.integers(2, max_size + 1))
        w = int(rng.integers(0, min(max_half_bandwidth, n - 1) + 1))
        m = BandMatrix(rng.standard_normal((w + 1, n)))
        expected = dense_eigenvalues(m)
        scale = max(np.max(np.abs(expected)), 1.0)
        worst = max(worst, float(np.max(np.abs(eigenvalues(m).eigenvalues - expected)) / scale))
    return worst <= 1e-10, f"max relative eigenvalue error {worst:.3e}"


def stieltjes_identity(count: int = 1000) -> tuple[bool, str]:
    """
    g^2 + z g + 1 = 0 and |g| < 1 off the real axis, and g(2i) = i (sqrt 2 - 1).
    """

    rng = np.random.default_rng(ORACLE_SEED)
    real = rng.uniform(-5.0, 5.0, count)
    imag = rng.uniform(0.1, 5.0, count) * rng.choice([-1.0, 1.0], count)
    z = real + 1j * imag
    g = stieltjes_g(z)

    residual = float(np.max(np.abs(g * g + z * g + 1.0)))
    inside = bool(np.all(np.abs(g) < 1.0))
    special = abs(stieltjes_g(2j) - 1j * (np.sqrt(2.0) - 1.0))
    passed = residual <= 1e-13 and inside and special <= 1e-12
    return passed, f"residual {residual:.3e}, |g| < 1: {inside}, |g(2i) - i(sqrt2 - 1)| = {special:.3e}"


def derivative_complex_step(count: int = 100) -> tuple[bool, str]:
    """
    g' = g^2 / (1 - g^2) against the complex-step derivative Im g(x + ih) / h on the real axis
    outside the spectrum, where g is real.
    """

    x = np.concatenate([np.linspace(2.5, 10.0, count // 2), np.linspace(-10.0, -2.5, count - count // 2)])
    stepped = np.asarray(stieltjes_g(x + 1j * COMPLEX_STEP)).imag / COMPLEX_STEP
    analytic = np.asarray(stieltjes_g_derivative(x + 0j)).real
    error = _relative_error(analytic, stepped)
    return error <= 1e-10, f"max relative error {error:.3e}"


def kernel_finite_differences(points: int = 10) -> tuple[bool, str]:
    """
    Closed-form variance kernel against mixed central differences of the log-modulus, on an
    interior grid whose two axes never meet the diagonal.
    """

    xs = np.linspace(0.3, 2.8, points)
    ys = xs + 0.5 * (xs[1] - xs[0])
    h = KERNEL_STEP
    worst = 0.0

    for profile in (BoxProfile(), TriangleProfile(), EpanechnikovProfile()):
        for x in xs:
            for y in ys[ys < np.pi]:
                difference = (
                    log_modulus(x + h, y + h, profile)
                    - log_modulus(x + h, y - h, profile)
                    - log_modulus(x - h, y + h, profile)
                    + log_modulus(x - h, y - h, profile)
                ) / (4.0 * h * h)
                kernel = variance_kernel(x, y, profile)
                worst = max(worst, abs(difference - kernel) / max(abs(kernel), 1.0))

    return worst <= 1e-6, f"max relative gap {worst:.3e}"


def variance_special_cases() -> tuple[bool, str]:
    """
    Constants do not fluctuate; x^2 and x isolate the kappa4 and u(0) terms.
    """

    box = BoxProfile()
    constant = clt_variance(PolynomialFunction([3.0]), box, 0.0).total
    square = clt_variance(PolynomialFunction([0.0, 0.0, 1.0]), box, -2.0)
    linear = clt_variance(PolynomialFunction([0.0, 1.0]), box, 0.0)

    checks = [
        abs(constant) <= 1e-9,
        abs(square.kappa4_term - (-2.0) * box.l2_norm_squared()) <= 1e-10,
        abs(square.u0_term) <= 1e-10,
        abs(linear.u0_term - box.value_at_zero() / 2.0) <= 1e-10,
        abs(linear.kappa4_term) <= 1e-10,
    ]
    detail = (
        f"constant {constant:.3e}, kappa4 term {square.kappa4_term:.12f}, u0 term {linear.u0_term:.12f}"
    )
    return all(checks), detail


def _mixed_difference(z1: complex, z2: complex, h: float, profile) -> complex:
    return (
        covariance_bracket(z1 + h, z2 + h, profile, 0.0)
        - covariance_bracket(z1 + h, z2 - h, profile, 0.0)
        - covariance_bracket(z1 - h, z2 + h, profile, 0.0)
        + covariance_bracket(z1 - h, z2 - h, profile, 0.0)
    ) / (4.0 * h * h)


def covariance_differences(z1: complex = 2j, z2: complex = 3j) -> tuple[bool, str]:
    """
    C(z1, z2) against Richardson-extrapolated mixed differences of its bracket, and the series
    route against the k-quadrature route.
    """

    box = BoxProfile()
    coarse = _mixed_difference(z1, z2, BRACKET_STEP, box)
    fine = _mixed_difference(z1, z2, BRACKET_STEP / 2.0, box)
    extrapolated = (4.0 * fine - coarse) / 3.0

    series = covariance_resolvents(z1, z2, box, 0.0)
    quadrature = covariance_resolvents(z1, z2, box, 0.0, method=CovarianceMethod.QUADRATURE)
    difference_gap = abs(series - extrapolated)
    method_gap = abs(series - quadrature)
    return (
        difference_gap <= 1e-8 and method_gap <= 1e-8,
        f"|C - finite differences| {difference_gap:.3e}, |series - quadrature| {method_gap:.3e}",
    )


def resolvent_statistic_identity(count: int = 20) -> tuple[bool, str]:
    """
    pi^{-1} int phi Im gamma_n(. + i eta) against the statistic of the Poisson-smoothed phi.
    """

    rng = np.random.default_rng(ORACLE_SEED)
    phi = GaussianBump(0.3, 0.5)
    worst = 0.0
    for _ in range(count):
        spectrum = Spectrum(rng.uniform(-2.0, 2.0, int(rng.integers(5, 40))))
        for eta in (0.1, 0.3):
            gap = abs(resolvent_les(spectrum, phi, eta) - evaluate_les(spectrum, poisson_smooth(phi, eta)))
            worst = max(worst, gap)
    return worst <= 1e-6, f"max gap {worst:.3e}"


def normality_null(count: int = 10_000) -> tuple[bool, str]:
    """
    The diagnostics applied to their own null hypothesis.
    """

    rng = np.random.default_rng(ORACLE_SEED)
    samples = rng.standard_normal(count)
    diagnostics = normality_tests(samples)
    deviation = max(d for _, d in char_function_compare(samples, 1.0))
    passed = (
        abs(diagnostics["skewness"]) <= 0.08
        and abs(diagnostics["excess_kurtosis"]) <= 0.15
        and diagnostics["p_value"] > 0.01
        and deviation <= 0.05
    )
    return passed, (
        f"skewness {diagnostics['skewness']:.3f}, excess kurtosis {diagnostics['excess_kurtosis']:.3f}, "
        f"p-value {diagnostics['p_value']:.3f}, char function deviation {deviation:.3f}"
    )


ORACLES: dict[str, Callable[[], tuple[bool, str]]] = {
    "eigensolver_equivalence": eigensolver_equivalence,
    "stieltjes_identity": stieltjes_identity,
    "derivative_complex_step": derivative_complex_step,
    "kernel_finite_differences": kernel_finite_differences,
    "variance_special_cases": variance_special_cases,
    "covariance_differences": covariance_differences,
    "resolvent_statistic_identity": resolvent_statistic_identity,
    "normality_null": normality_null,
}


def run_oracles(names: list[str] = None) -> list[tuple[str, bool, str]]:
    """
    Run the named oracles (all by default). An oracle that raises counts as failed.
    """

    results = []
    for name in names or list(ORACLES):
        try:
            passed, detail = ORACLES[name]()
        except Exception as e:
            logger.exception(f"Oracle {name} raised")
            passed, detail = False, f"raised {type(e).__name__}: {e}"
        results.append((name, passed, detail))
    return results
