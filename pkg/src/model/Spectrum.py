from __future__ import annotations

import numpy as np

from src.errors import InvariantError


class Spectrum:
    """
    All eigenvalues of one sampled matrix, sorted ascending.

    Attributes:
        eigenvalues (np.ndarray): Read-only sorted eigenvalues.
    """

    def __init__(self, eigenvalues: np.ndarray):
        eigenvalues = np.sort(np.array(eigenvalues, dtype=np.float64, copy=True))

        if not np.all(np.isfinite(eigenvalues)):
            raise InvariantError("Spectrum contains NaN or infinite eigenvalues.")

        eigenvalues.setflags(write=False)
        self.eigenvalues = eigenvalues

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def trace(self) -> float:
        return float(np.sum(self.eigenvalues))

    def second_moment(self) -> float:
        return float(np.sum(self.eigenvalues**2))

    def __eq__(self, other) -> bool:
        return isinstance(other, Spectrum) and np.array_equal(self.eigenvalues, other.eigenvalues)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Spectrum(n={self.n})"
