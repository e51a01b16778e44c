import numpy as np
from scipy import stats

from src.errors import ConfigError, DegenerateSampleError

MIN_NORMALITY_SAMPLES = 100
DEFAULT_T_POINTS = 25
T_RANGE = 3.0


def normality_tests(samples: np.ndarray | list[float]) -> dict:
    """
    Skewness, excess kurtosis and the Kolmogorov-Smirnov distance to Normal(0, empirical variance),
    with the asymptotic Kolmogorov p-value.
    """

    samples = np.asarray(samples, dtype=np.float64)
    if samples.size < MIN_NORMALITY_SAMPLES:
        raise DegenerateSampleError(
            f"Normality tests need at least {MIN_NORMALITY_SAMPLES} samples, got {samples.size}."
        )

    variance = float(np.var(samples, ddof=1))
    if not variance > 0:
        raise DegenerateSampleError("Normality tests got samples with zero variance.")

    ks = stats.kstest(samples, "norm", args=(0.0, np.sqrt(variance)), method="asymp")
    return {
        "skewness": float(stats.skew(samples)),
        "excess_kurtosis": float(stats.kurtosis(samples, fisher=True)),
        "ks_statistic": float(ks.statistic),
        "p_value": float(ks.pvalue),
    }


def empirical_char_function(samples: np.ndarray | list[float], t: np.ndarray | float) -> np.ndarray | complex:
    """
    Z_R(t) = R^{-1} sum_r exp(i t x_r).
    """

    samples = np.asarray(samples, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    values = np.mean(np.exp(1j * np.multiply.outer(t, samples)), axis=-1)
    return complex(values) if values.ndim == 0 else values


def default_t_grid(variance: float, points: int = DEFAULT_T_POINTS) -> np.ndarray:
    """
    Symmetric grid on [-3 / sqrt(V), 3 / sqrt(V)] through t = 0.
    """

    if not variance > 0:
        return np.zeros(1)
    limit = T_RANGE / np.sqrt(variance)
    return np.linspace(-limit, limit, points if points % 2 else points + 1)


def char_function_compare(
    samples: np.ndarray | list[float], variance: float, t_grid: np.ndarray | list[float] = None
) -> list[tuple[float, float]]:
    """
    Deviations |Z_R(t) - exp(-t^2 V / 2)| on the grid.
    """

    if not variance >= 0:
        raise ConfigError(f"Reference variance must be nonnegative, got {variance}.")

    t_grid = default_t_grid(variance) if t_grid is None else np.asarray(t_grid, dtype=np.float64)
    empirical = np.atleast_1d(empirical_char_function(samples, t_grid))
    deviations = np.abs(empirical - np.exp(-0.5 * t_grid**2 * variance))
    return [(float(t), float(d)) for t, d in zip(t_grid, deviations)]
