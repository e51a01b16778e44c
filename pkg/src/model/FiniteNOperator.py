from __future__ import annotations

import numpy as np
from scipy import sparse

from src.errors import ConfigError, SizeLimitError
from src.model.BandMatrix import BandMatrix
from src.model.BandMatrixSpec import MIN_BANDWIDTH, half_bandwidth
from src.model.profile.BandProfile import BandProfile

MAX_OPERATOR_SIZE = 8192


class FiniteNOperator:
    """
    The deterministic variance operator U with U_ik = u(|i - k| / b) / b, together with its
    restrictions U^(p) to the indices i, k > p.

    Indices are 0-based, so p runs over 0..n-1 and U^(p) acts on rows p+1..n-1.

    Attributes:
        n (int): Matrix size.
        b (float): Bandwidth parameter.
        profile (BandProfile): Band shape u.
        half_bandwidth (int): Number of nonzero off-diagonals.
        weights (np.ndarray): u(d / b) for d = 0..w, the unscaled entries of each diagonal.
    """

    def __init__(self, n: int, b: float, profile: BandProfile):
        if int(n) != n or n < 2:
            raise ConfigError(f"Operator size n must be an integer of at least 2, got {n}.")
        if n > MAX_OPERATOR_SIZE:
            raise SizeLimitError(f"Finite-n operator is capped at n={MAX_OPERATOR_SIZE}, got {n}.")
        if not b >= MIN_BANDWIDTH:
            raise ConfigError(f"Bandwidth b must be at least {MIN_BANDWIDTH}, got {b}.")

        self.n = int(n)
        self.b = float(b)
        self.profile = profile
        self.half_bandwidth = half_bandwidth(profile, self.b)

        if self.half_bandwidth >= self.n:
            raise ConfigError(
                f"Band of half-width {self.half_bandwidth} does not fit inside a matrix of size {self.n}."
            )

        self.weights = np.asarray(profile.value(np.arange(self.half_bandwidth + 1) / self.b), dtype=np.float64)
        self.weights.setflags(write=False)

    def band(self) -> BandMatrix:
        diagonals = np.repeat(self.weights[:, None] / self.b, self.n, axis=1)
        return BandMatrix(diagonals)

    def to_sparse(self) -> sparse.csr_matrix:
        w = self.half_bandwidth
        offsets = np.arange(-w, w + 1)
        values = [np.full(self.n - abs(d), self.weights[abs(d)] / self.b) for d in offsets]
        return sparse.diags(values, offsets, shape=(self.n, self.n), format="csr")

    def restricted_vector(self, p: int) -> np.ndarray:
        """
        u^(p) with entries u(|p - i| / b) for i > p and zeros elsewhere.
        """

        if not 0 <= p < self.n:
            raise ConfigError(f"Restriction index must lie in [0, {self.n}), got {p}.")

        vector = np.zeros(self.n)
        stop = min(self.n, p + self.half_bandwidth + 1)
        vector[p + 1 : stop] = self.weights[1 : stop - p]
        return vector

    def restricted_vectors(self, start: int, stop: int) -> np.ndarray:
        """
        Columns u^(p) for p in [start, stop), restricted to rows start..n-1.
        """

        rows = np.arange(start, self.n)[:, None]
        columns = np.arange(start, stop)[None, :]
        distance = rows - columns
        inside = (distance > 0) & (distance <= self.half_bandwidth)
        return np.where(inside, self.weights[np.clip(distance, 0, self.half_bandwidth)], 0.0)

    def infinity_norm(self) -> float:
        """
        max_k sum_i |U_ki|, attained in the middle of the matrix once n > 2w.
        """

        w = self.half_bandwidth
        row_sums = np.full(self.n, self.weights[0])
        for d in range(1, w + 1):
            row_sums[d:] += self.weights[d]
            row_sums[: self.n - d] += self.weights[d]
        return float(np.max(np.abs(row_sums)) / self.b)

    def to_dict(self) -> dict:
        return {"n": self.n, "b": self.b, "profile": self.profile.to_dict()}

    def __repr__(self) -> str:
        return f"FiniteNOperator(n={self.n}, b={self.b}, profile={self.profile})"
