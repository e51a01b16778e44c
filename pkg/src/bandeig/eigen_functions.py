import logging
from pathlib import Path

import numpy as np
from scipy import linalg

from src.bandeig.njitted import reduce_band, tql_eigenvalues
from src.errors import ConfigError, ConvergenceError, InvariantError, SizeLimitError
from src.model.BandMatrix import BandMatrix, PeriodicBandMatrix
from src.model.Spectrum import Spectrum
from src.model.Tridiagonal import Tridiagonal

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = float(np.finfo(np.float64).eps)
MAX_QL_ITERATIONS = 50
MAX_DENSE_SIZE = 4096
CONSERVATION_TOLERANCE = 1e-8


def reduce_to_tridiagonal(m: BandMatrix) -> Tridiagonal:
    """
    Orthogonally similar tridiagonal matrix, by plane rotations confined to the band.
    Matrices with half-bandwidth at most 1 pass through unchanged.
    """

    if m.half_bandwidth == 0:
        return Tridiagonal(m.diagonals[0], np.zeros(max(m.n - 1, 0)))
    if m.half_bandwidth == 1:
        return Tridiagonal(m.diagonals[0], m.diagonal(1))

    diag, offdiag = reduce_band(m.lower_band(), m.half_bandwidth)
    return Tridiagonal(diag, offdiag)


def tridiag_eigenvalues(t: Tridiagonal, tol: float = DEFAULT_TOLERANCE) -> Spectrum:
    if not tol > 0:
        raise ConfigError(f"Eigenvalue tolerance must be positive, got {tol}.")

    diag = t.diag.copy()
    offdiag = np.zeros(t.n)
    offdiag[: t.n - 1] = t.offdiag

    status = tql_eigenvalues(diag, offdiag, tol, MAX_QL_ITERATIONS)
    if status:
        raise ConvergenceError(
            f"QL iteration did not converge for eigenvalue {status - 1} within {MAX_QL_ITERATIONS} sweeps."
        )

    return Spectrum(diag)


def check_conservation(spectrum: Spectrum, trace: float, frobenius_squared: float):
    """
    Similarity invariance: sum of eigenvalues and of their squares against the matrix trace and
    squared Frobenius norm.
    """

    n = max(spectrum.n, 1)
    for name, expected, actual in (
        ("trace", trace, spectrum.trace()),
        ("Frobenius norm", frobenius_squared, spectrum.second_moment()),
    ):
        allowed = CONSERVATION_TOLERANCE * n * max(1.0, abs(expected) / n)
        if abs(actual - expected) > allowed:
            raise InvariantError(
                f"Eigenvalues do not conserve the {name}: {actual} vs {expected}."
            )


def eigenvalues(m: BandMatrix | PeriodicBandMatrix) -> Spectrum:
    """
    Full spectrum of a band matrix. Periodized matrices go through a dense solver, which is capped
    at n = 4096.
    """

    if isinstance(m, PeriodicBandMatrix):
        if m.n > MAX_DENSE_SIZE:
            raise SizeLimitError(
                f"Dense eigenvalue path is limited to n <= {MAX_DENSE_SIZE}, got n={m.n}."
            )
        spectrum = Spectrum(linalg.eigvalsh(m.to_dense()))
    else:
        spectrum = tridiag_eigenvalues(reduce_to_tridiagonal(m))

    check_conservation(spectrum, m.trace(), m.frobenius_squared())
    return spectrum


def dense_eigenvalues(m: BandMatrix | PeriodicBandMatrix) -> np.ndarray:
    """
    Oracle eigenvalues from LAPACK on the densified matrix.
    """
    return linalg.eigvalsh(m.to_dense())


def stieltjes_trace(s: Spectrum, z: complex) -> complex:
    """
    The resolvent trace sum_i (lambda_i - z)^{-1}.
    """

    z = complex(z)
    if z.imag == 0:
        raise ConfigError(f"Resolvent trace needs a non-real argument, got z={z}.")

    return complex(np.sum(1.0 / (s.eigenvalues - z)))


def dump_spectrum(s: Spectrum, path: str | Path):
    """
    Write the eigenvalues one per line with 17 significant digits.
    """

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as file:
        for value in s.eigenvalues:
            file.write(f"{value:.17g}\n")

    logger.info(f"Wrote {s.n} eigenvalues to {path}")
