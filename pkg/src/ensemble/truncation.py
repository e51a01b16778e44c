import logging

import numpy as np

from src.model.distribution.EntryDistribution import EntryDistribution

logger = logging.getLogger(__name__)


def truncate_center(x: np.ndarray | float, b: float, dist: EntryDistribution) -> np.ndarray | float:
    """
    Entry of the truncated model: x 1_{|x| <= sqrt(b)} minus the truncated mean of the law.
    """

    truncated = np.where(np.abs(x) <= np.sqrt(b), x, 0.0) - dist.truncated_mean(b)
    if np.ndim(truncated) == 0:
        return float(truncated)
    return truncated


def truncated_moments(dist: EntryDistribution, b: float) -> tuple[float, float, float]:
    """
    Mean, second and fourth moment of the truncated-centered entry. The mean is zero by construction;
    the second moment falls short of 1 and the fourth of 3 + kappa4 by the mass beyond sqrt(b).
    """

    mean = dist.truncated_mean(b)
    raw = [dist.truncated_raw_moment(order, b) for order in range(5)]

    second = raw[2] - 2.0 * mean * raw[1] + mean**2 * raw[0]
    fourth = (
        raw[4]
        - 4.0 * mean * raw[3]
        + 6.0 * mean**2 * raw[2]
        - 4.0 * mean**3 * raw[1]
        + mean**4 * raw[0]
    )
    # the atom at zero left by the indicator contributes mean^p (1 - P(|w| <= sqrt(b)))
    outside = 1.0 - raw[0]
    second += mean**2 * outside
    fourth += mean**4 * outside

    logger.debug(f"Truncated moments at b={b}: second={second}, fourth={fourth}")
    return 0.0, second, fourth
