import logging

import numpy as np

from src.ensemble.random_streams import Stream, entry_uniforms
from src.ensemble.truncation import truncate_center
from src.errors import ConfigError
from src.model.BandMatrix import BandMatrix, PeriodicBandMatrix
from src.model.BandMatrixSpec import BandMatrixSpec
from src.model.BandwidthRule import BandwidthRule
from src.model.profile.BandProfile import BandProfile

logger = logging.getLogger(__name__)


def profile_value(profile: BandProfile, i: int, j: int, b: float) -> float:
    """
    The variance weight u_ij = u(|i - j| / b).
    """
    return float(profile.value(abs(i - j) / b))


def bandwidth_from_rule(n: int, rule: BandwidthRule) -> float:
    return rule.bandwidth(n)


def diagonal_scales(spec: BandMatrixSpec) -> np.ndarray:
    """
    Standard deviations (u(d / b) / b)^{1/2} of the entries on the d-th diagonal, d = 0..w.
    """

    offsets = np.arange(spec.half_bandwidth + 1)
    return np.sqrt(spec.profile.value(offsets / spec.b) / spec.b)


def raw_band_entries(spec: BandMatrixSpec) -> np.ndarray:
    """
    Standardized entries w~ on the band, laid out like BandMatrix storage (padding left at zero).
    """

    n, w = spec.n, spec.half_bandwidth
    entries = np.zeros((w + 1, n))
    for d in range(w + 1):
        rows = np.arange(n - d)
        uniforms = entry_uniforms(spec.seed, Stream.BAND, rows, rows + d)
        entries[d, : n - d] = spec.distribution.from_uniform(uniforms)
    return entries


def raw_corner_entries(spec: BandMatrixSpec) -> np.ndarray:
    """
    Fresh standardized entries for the corner block, corner[a, c] at matrix position (a, n - w + c).
    """

    n, w = spec.n, spec.half_bandwidth
    a, c = np.triu_indices(w)
    corner = np.zeros((w, w))
    if a.size:
        uniforms = entry_uniforms(spec.seed, Stream.CORNER, a, n - w + c)
        corner[a, c] = spec.distribution.from_uniform(uniforms)
    return corner


def sample_band_matrix(spec: BandMatrixSpec) -> BandMatrix:
    return BandMatrix(diagonal_scales(spec)[:, None] * raw_band_entries(spec))


def _check_periodizable(spec: BandMatrixSpec):
    if 2 * spec.half_bandwidth + 1 >= spec.n:
        raise ConfigError(
            f"Band of half-width {spec.half_bandwidth} overlaps its periodic corners for n={spec.n}."
        )


def _periodize(spec: BandMatrixSpec, raw: np.ndarray) -> PeriodicBandMatrix:
    scales = diagonal_scales(spec)
    w = spec.half_bandwidth

    core = BandMatrix(scales[:, None] * truncate_center(raw, spec.b, spec.distribution))

    a, c = np.triu_indices(w)
    corner = np.zeros((w, w))
    if a.size:
        periodic_distance = w - c + a
        omega = truncate_center(raw_corner_entries(spec)[a, c], spec.b, spec.distribution)
        corner[a, c] = scales[periodic_distance] * omega

    return PeriodicBandMatrix(core, corner)


def sample_periodized(spec: BandMatrixSpec) -> PeriodicBandMatrix:
    """
    Truncated and periodically continued matrix. The core reuses the w~ realizations of
    sample_band_matrix for the same seed; the corners come from an independent stream.
    """

    _check_periodizable(spec)
    return _periodize(spec, raw_band_entries(spec))


def sample_coupled(spec: BandMatrixSpec) -> tuple[BandMatrix, PeriodicBandMatrix]:
    """
    The pair (band matrix, periodized matrix) built from one draw of the band entries.
    """

    _check_periodizable(spec)
    raw = raw_band_entries(spec)
    band = BandMatrix(diagonal_scales(spec)[:, None] * raw)
    return band, _periodize(spec, raw)
