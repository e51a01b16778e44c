import logging

import numpy as np

from src.bandeig.eigen_functions import eigenvalues
from src.errors import ConfigError, ConvergenceError
from src.model.FiniteNOperator import FiniteNOperator
from src.theory.profile_moments import profile_convolution_moment

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE = 512
NEUMANN_TOLERANCE = 1e-12
SERIES_TOLERANCE = 1e-16
MAX_NEUMANN_TERMS = 20_000
MAX_LIMIT_TERMS = 2000


def _check_zeta(zeta: complex):
    if not np.isfinite(zeta) or abs(zeta) <= 1:
        raise ConfigError(f"Finite-n identity needs |zeta| > 1, got zeta={zeta}.")


def restricted_resolvent_sum(op: FiniteNOperator, zeta: complex, block_size: int = DEFAULT_BLOCK_SIZE) -> complex:
    """
    sum_p ((zeta - U^(p))^{-1} u^(p), u^(p)) with every solve done by the Neumann series
    sum_m zeta^{-m-1} (U^(p))^m u^(p), over blocks of p at once.

    U^(p) applied to a vector supported on i > p is U followed by zeroing rows i <= p, so the block
    only needs the rows past its first index.
    """

    u = op.to_sparse()
    total = 0j

    for start in range(0, op.n, block_size):
        stop = min(start + block_size, op.n)
        local = u[start:, start:]
        vectors = op.restricted_vectors(start, stop)
        # rows i > p of column p
        keep = np.arange(start, op.n)[:, None] > np.arange(start, stop)[None, :]

        term = vectors / zeta
        block_total = np.sum(term * vectors)
        for m in range(1, MAX_NEUMANN_TERMS + 1):
            term = np.where(keep, local @ term, 0.0) / zeta
            block_total += np.sum(term * vectors)
            if np.max(np.linalg.norm(term, axis=0)) < NEUMANN_TOLERANCE:
                break
        else:
            raise ConvergenceError(
                f"Neumann series for zeta={zeta} did not reach {NEUMANN_TOLERANCE} in {MAX_NEUMANN_TERMS} terms."
            )

        logger.debug(f"Neumann block [{start}, {stop}) converged after {m} terms")
        total += block_total

    return complex(total)


def trace_log_identity(op: FiniteNOperator, zeta: complex, spectrum: np.ndarray = None) -> complex:
    """
    -(b / n) (Tr log(1 - U / zeta) + Tr U / zeta), traced through the eigenvalues of U rather than
    through the Neumann series of the left side, so the two sides are computed independently.
    """

    if spectrum is None:
        spectrum = eigenvalues(op.band()).eigenvalues
    ratio = spectrum / zeta
    return complex(-(op.b / op.n) * np.sum(np.log(1.0 - ratio) + ratio))


def log_integral_limit(profile, zeta: complex) -> complex:
    """
    -(2 pi)^{-1} int log(1 - u^(k) / zeta) dk - u(0) / zeta, expanded as sum_{m >= 2} mu_m / (m zeta^m).
    """

    _check_zeta(zeta)

    terms = int(np.ceil(np.log(SERIES_TOLERANCE) / -np.log(abs(zeta)))) + 2
    if terms > MAX_LIMIT_TERMS:
        raise ConvergenceError(f"Log series at |zeta|={abs(zeta)} needs {terms} terms.")

    m = np.arange(2, terms + 1)
    moments = np.array([profile_convolution_moment(profile, int(k)) for k in m])
    return complex(np.sum(moments / (m * np.power(complex(zeta), m))))


def finite_n_sigma(op: FiniteNOperator, zeta: complex) -> tuple[complex, complex, complex]:
    """
    Both sides of the finite-n operator identity and the integral limit of its right side.

    Returns:
        (lhs, rhs, limit) with lhs = (zeta n)^{-1} sum_p b^{-1} ((zeta - U^(p))^{-1} u^(p), u^(p)).
    """

    _check_zeta(zeta)
    spectrum = eigenvalues(op.band()).eigenvalues
    radius = float(np.max(np.abs(spectrum)))
    # the restrictions U^(p) are compressions of U, so their spectral radii are at most this one
    if radius >= abs(zeta):
        raise ConfigError(
            f"Finite-n identity needs |zeta| above the spectral radius {radius} of U "
            f"(row-sum bound ||U||_inf = {op.infinity_norm()}), got |zeta| = {abs(zeta)}."
        )

    lhs = restricted_resolvent_sum(op, zeta) / (zeta * op.n * op.b)
    rhs = trace_log_identity(op, zeta, spectrum)
    limit = log_integral_limit(op.profile, zeta)

    logger.info(f"Finite-n identity at n={op.n}, b={op.b}, zeta={zeta}: |lhs - rhs| = {abs(lhs - rhs)}")
    return lhs, rhs, limit
