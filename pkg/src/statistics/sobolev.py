import logging

import numpy as np

from src.errors import ConfigError, ConvergenceError
from src.model.function.TestFunction import TestFunction

logger = logging.getLogger(__name__)

DEFAULT_SOBOLEV_INDEX = 2.5
REFINEMENT_TOLERANCE = 1e-6
INITIAL_POINTS = 1024
MAX_POINTS = 2**22
MAX_WINDOW_DOUBLINGS = 12


def discrete_norm_squared(phi: TestFunction, s: float, half_width: float, points: int) -> float:
    """
    Riemann sum of (1 + 2|k|)^{2s} |phi^(k)|^2 over the FFT frequencies, where phi^ is approximated
    from samples of phi on [-L, L). Only |phi^| enters, so the sign of the exponent of the discrete
    transform is irrelevant; the step h rescales it to int e^{ikx} phi(x) dx.
    """

    step = 2.0 * half_width / points
    grid = -half_width + step * np.arange(points)
    transform = step * np.fft.fft(phi(grid))
    frequencies = 2.0 * np.pi * np.fft.fftfreq(points, d=step)
    weights = (1.0 + 2.0 * np.abs(frequencies)) ** (2.0 * s)
    return float(np.sum(weights * np.abs(transform) ** 2) * (2.0 * np.pi / (points * step)))


def _relative_change(new: float, old: float) -> float:
    if new == old:
        return 0.0
    return abs(new - old) / max(abs(new), abs(old))


def sobolev_norm(phi: TestFunction, s: float = DEFAULT_SOBOLEV_INDEX) -> float:
    """
    ||phi||_s = (int (1 + 2|k|)^{2s} |phi^(k)|^2 dk)^{1/2} with phi^(k) = int e^{ikx} phi(x) dx.
    The grid is refined until two refinements agree, then the window doubled until it stops
    mattering, both within a relative 1e-6.
    """

    if not s > 0:
        raise ConfigError(f"Sobolev index must be positive, got s={s}.")
    if not phi.is_integrable:
        raise ConfigError(f"Sobolev norm needs a decaying test function, got {phi.name}.")

    lo, hi = phi.effective_support()
    half_width = max(abs(lo), abs(hi), 1.0) * 2.0
    if lo == hi == 0.0:
        return 0.0

    points = INITIAL_POINTS
    current = discrete_norm_squared(phi, s, half_width, points)

    while True:
        if points > MAX_POINTS:
            raise ConvergenceError(f"Sobolev norm of {phi.name} did not converge under grid refinement.")
        refined = discrete_norm_squared(phi, s, half_width, 2 * points)
        points *= 2
        change = _relative_change(refined, current)
        current = refined
        if change < REFINEMENT_TOLERANCE:
            break

    for _ in range(MAX_WINDOW_DOUBLINGS):
        # doubling the window at fixed step keeps the resolution
        widened = discrete_norm_squared(phi, s, 2.0 * half_width, 2 * points)
        change = _relative_change(widened, current)
        half_width *= 2.0
        points *= 2
        current = widened
        if change < REFINEMENT_TOLERANCE:
            logger.debug(f"Sobolev norm of {phi.name}: window [-{half_width}, {half_width}], {points} points")
            return float(np.sqrt(current))

    raise ConvergenceError(f"Sobolev norm of {phi.name} did not converge under window doubling.")


def admissibility_report(phi: TestFunction, s: float = DEFAULT_SOBOLEV_INDEX) -> float | str:
    """
    The norm recorded in reports, or a marker for test functions outside H_s and L_1.
    """

    if not phi.is_integrable:
        return "not in H_s∩L₁"
    return sobolev_norm(phi, s)
