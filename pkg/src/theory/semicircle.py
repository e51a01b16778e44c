import numpy as np

from src.errors import ConfigError

SPECTRUM_EDGE = 2.0


def semicircle_density(x: np.ndarray | float) -> np.ndarray | float:
    """
    rho_sc(x) = (2 pi)^{-1} sqrt(4 - x^2) on [-2, 2], zero elsewhere.
    """

    x = np.asarray(x, dtype=np.float64)
    density = np.sqrt(np.clip(4.0 - x**2, 0.0, None)) / (2.0 * np.pi)
    return float(density) if density.ndim == 0 else density


def stieltjes_g(z: np.ndarray | complex) -> np.ndarray | complex:
    """
    Stieltjes transform of the semicircle law: the root of g^2 + z g + 1 = 0 with |g| < 1.

    The larger root -(z + s) / 2, with the square root s = sqrt(z^2 - 4) oriented along z, is free of
    cancellation; g is its reciprocal since the roots multiply to 1.
    """

    z = np.asarray(z, dtype=np.complex128)
    on_cut = (z.imag == 0) & (np.abs(z.real) <= SPECTRUM_EDGE)
    if np.any(on_cut):
        raise ConfigError(f"Stieltjes transform is undefined on the cut [-2, 2], got z={z[on_cut].ravel()[0]}.")

    s = np.sqrt(z * z - 4.0)
    s = np.where((np.conj(z) * s).real >= 0, s, -s)
    g = -2.0 / (z + s)
    return complex(g) if g.ndim == 0 else g


def stieltjes_g_derivative(z: np.ndarray | complex) -> np.ndarray | complex:
    """
    g'(z) = g^2 / (1 - g^2), from differentiating g^2 + z g + 1 = 0.
    """

    g = np.asarray(stieltjes_g(z))
    derivative = g**2 / (1.0 - g**2)
    return complex(derivative) if derivative.ndim == 0 else derivative
