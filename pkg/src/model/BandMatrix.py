from __future__ import annotations

import numpy as np

from src.errors import ConfigError


class BandMatrix:
    """
    Symmetric band matrix stored by diagonals. Row d of the storage holds the d-th superdiagonal,
    diagonals[d, k] = M[k, k + d] for k < n - d, and is zero-padded on the right.

    Attributes:
        n (int): Matrix size.
        half_bandwidth (int): Number w of stored off-diagonals.
        diagonals (np.ndarray): Read-only array of shape (w + 1, n).
    """

    def __init__(self, diagonals: np.ndarray):
        diagonals = np.array(diagonals, dtype=np.float64, copy=True)
        if diagonals.ndim != 2 or diagonals.shape[0] < 1:
            raise ConfigError(f"Band storage must be a (w + 1, n) array, got shape {diagonals.shape}.")

        self.half_bandwidth = diagonals.shape[0] - 1
        self.n = diagonals.shape[1]

        for d in range(1, self.half_bandwidth + 1):
            diagonals[d, self.n - d :] = 0.0

        diagonals.setflags(write=False)
        self.diagonals = diagonals

    def diagonal(self, d: int) -> np.ndarray:
        return self.diagonals[d, : self.n - d]

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n, self.n))
        rows = np.arange(self.n)
        for d in range(self.half_bandwidth + 1):
            k = rows[: self.n - d]
            dense[k, k + d] = self.diagonals[d, : self.n - d]
            dense[k + d, k] = self.diagonals[d, : self.n - d]
        return dense

    def lower_band(self, extra_rows: int = 1) -> np.ndarray:
        """
        Writable copy in lower storage band[d, k] = M[k + d, k], with spare zero rows for bulges.
        """
        band = np.zeros((self.half_bandwidth + 1 + extra_rows, self.n))
        band[: self.half_bandwidth + 1] = self.diagonals
        return band

    def trace(self) -> float:
        return float(np.sum(self.diagonals[0]))

    def frobenius_squared(self) -> float:
        return float(np.sum(self.diagonals[0] ** 2) + 2.0 * np.sum(self.diagonals[1:] ** 2))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.diagonals)))

    def __eq__(self, other) -> bool:
        return isinstance(other, BandMatrix) and np.array_equal(self.diagonals, other.diagonals)

    def __repr__(self) -> str:
        return f"BandMatrix(n={self.n}, half_bandwidth={self.half_bandwidth})"

    @staticmethod
    def from_dense(dense: np.ndarray, half_bandwidth: int) -> BandMatrix:
        """
        Band storage of the upper triangle of a dense matrix. Entries beyond the band are ignored.
        """

        dense = np.asarray(dense, dtype=np.float64)
        n = dense.shape[0]
        diagonals = np.zeros((half_bandwidth + 1, n))
        for d in range(half_bandwidth + 1):
            diagonals[d, : n - d] = np.diagonal(dense, offset=d)
        return BandMatrix(diagonals)


class PeriodicBandMatrix:
    """
    Band matrix continued periodically: besides the core band it carries entries in the upper right
    and lower left corners, at positions whose periodic distance min(|i - j|, n - |i - j|) is at most w.

    Attributes:
        core (BandMatrix): Truncated and centered band entries.
        corner (np.ndarray): Read-only (w, w) block, corner[a, c] = M[a, n - w + c], nonzero only for a <= c.
    """

    def __init__(self, core: BandMatrix, corner: np.ndarray):
        w = core.half_bandwidth
        corner = np.array(corner, dtype=np.float64, copy=True).reshape(w, w)

        if 2 * w + 1 >= core.n and w > 0:
            raise ConfigError(
                f"Band of half-width {w} overlaps its periodic corners in a matrix of size {core.n}."
            )

        corner[np.tril_indices(w, k=-1)] = 0.0
        corner.setflags(write=False)

        self.core = core
        self.corner = corner

    @property
    def n(self) -> int:
        return self.core.n

    @property
    def half_bandwidth(self) -> int:
        return self.core.half_bandwidth

    def to_dense(self) -> np.ndarray:
        dense = self.core.to_dense()
        w = self.half_bandwidth
        if w > 0:
            dense[:w, self.n - w :] = self.corner
            dense[self.n - w :, :w] = self.corner.T
        return dense

    def trace(self) -> float:
        return self.core.trace()

    def frobenius_squared(self) -> float:
        return self.core.frobenius_squared() + 2.0 * float(np.sum(self.corner**2))

    def max_abs(self) -> float:
        if self.corner.size == 0:
            return self.core.max_abs()
        return max(self.core.max_abs(), float(np.max(np.abs(self.corner))))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PeriodicBandMatrix)
            and self.core == other.core
            and np.array_equal(self.corner, other.corner)
        )

    def __repr__(self) -> str:
        return f"PeriodicBandMatrix(n={self.n}, half_bandwidth={self.half_bandwidth})"
