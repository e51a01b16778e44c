import logging

import numpy as np

from src.errors import ConvergenceError
from src.model.profile.BandProfile import BandProfile

logger = logging.getLogger(__name__)

PANEL_NODES = 24
INNER_PANELS_PER_PERIOD = 4
INNER_PERIODS = 8
MAX_RULE_NODES = 4_000_000


def profile_convolution_moment(profile: BandProfile, m: int) -> float:
    """
    mu_m = (2 pi)^{-1} int u^(k)^m dk = u^{*m}(0).
    """
    return profile.convolution_moment(m)


def moment_sequence(profile: BandProfile, count: int) -> np.ndarray:
    """
    Array [mu_1, ..., mu_count].
    """
    return np.array([profile.convolution_moment(m) for m in range(1, count + 1)])


def fourier_rule(
    profile: BandProfile,
    order: int,
    prefactor: float = 1.0,
    tolerance: float = 1e-10,
    inner_width: float = None,
) -> tuple[np.ndarray, np.ndarray, float]:
    """
    Composite Gauss-Legendre rule on [0, K] for k-integrals whose integrand is bounded by
    prefactor * |u^(k)|^order once |u^(k)| <= 1/2. K is the smallest radius where the tail bound
    prefactor * C^order K^{1 - p order} / (p order - 1) drops below the tolerance.

    The rule is fixed (non-adaptive), so finite differences of rule-integrated quantities equal the
    rule applied to finite differences of the integrand.

    inner_width caps the panel width near the origin, for integrands with a peak narrower than the
    default panels.

    Returns the nodes, the weights and the truncation radius K.
    """

    constant, power = profile.fourier_decay()
    exponent = power * order - 1
    cutoff = (prefactor * constant**order / (exponent * tolerance)) ** (1.0 / exponent)
    # the bound only holds where |u^| <= 1/2
    cutoff = max(cutoff, (2.0 * constant) ** (1.0 / power), 1.0)

    period = np.pi / profile.radius
    inner_end = INNER_PERIODS * period
    per_period = INNER_PANELS_PER_PERIOD
    if inner_width is not None:
        per_period = max(per_period, int(np.ceil(period / inner_width)))
    inner_edges = np.linspace(0.0, inner_end, INNER_PERIODS * per_period + 1)
    outer_count = max(int(np.ceil((cutoff - inner_end) / period)), 0)
    outer_edges = inner_end + period * np.arange(outer_count + 1)
    edges = np.concatenate([inner_edges, outer_edges[1:]])

    if (edges.size - 1) * PANEL_NODES > MAX_RULE_NODES:
        raise ConvergenceError(
            f"Fourier rule for the {profile.family.value} profile would need {edges.size - 1} panels."
        )

    nodes, weights = np.polynomial.legendre.leggauss(PANEL_NODES)
    left, right = edges[:-1, None], edges[1:, None]
    k = (0.5 * (left + right) + 0.5 * (right - left) * nodes[None, :]).ravel()
    w = (0.5 * (right - left) * weights[None, :]).ravel()

    logger.debug(f"Fourier rule for {profile}: order {order}, truncation radius {edges[-1]}")
    return k, w, float(edges[-1])
