import numpy as np

from src.errors import ConfigError, DegenerateSampleError
from src.model.FluctuationSample import FluctuationSample
from src.model.Spectrum import Spectrum
from src.model.function.TestFunction import TestFunction
from src.statistics.smoothing import integrate_real_line

MAX_BREAKPOINTS = 400


def evaluate_les(s: Spectrum, phi: TestFunction) -> float:
    """
    The linear eigenvalue statistic N_n[phi] = sum_j phi(lambda_j).
    """
    return float(np.sum(phi(s.eigenvalues)))


def center_scale(
    values: list[float], b: float, n: int, seeds: list[int] = None
) -> list[FluctuationSample]:
    """
    Subtract the cross-replica mean and scale by sqrt(b / n). Replica ids are list positions.
    """

    if len(values) < 2:
        raise DegenerateSampleError(f"Centering needs at least 2 replicas, got {len(values)}.")

    values = np.asarray(values, dtype=np.float64)
    scaled = np.sqrt(b / n) * (values - np.mean(values))
    seeds = seeds if seeds is not None else [0] * len(values)

    return [
        FluctuationSample(value, replica_id, seed)
        for replica_id, (value, seed) in enumerate(zip(scaled, seeds))
    ]


def resolvent_les(s: Spectrum, phi: TestFunction, eta: float) -> float:
    """
    pi^{-1} int phi(lambda) Im gamma_n(lambda + i eta) d lambda, integrated directly against the
    imaginary part of the resolvent trace.
    """

    if not eta > 0:
        raise ConfigError(f"Resolvent statistic needs eta > 0, got {eta}.")
    if not phi.is_integrable:
        raise ConfigError(f"Resolvent statistic needs an integrable test function, got {phi.name}.")

    eigenvalues = s.eigenvalues
    lo, hi = phi.effective_support()

    def integrand(x: float) -> float:
        im_trace = np.sum(eta / ((eigenvalues - x) ** 2 + eta**2))
        return phi(x) * im_trace / np.pi

    points = eigenvalues if eigenvalues.size <= MAX_BREAKPOINTS else ()
    return integrate_real_line(integrand, lo, hi, heavy_tails=phi.has_heavy_tails, points=points)
