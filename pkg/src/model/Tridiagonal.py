import numpy as np

from src.errors import ConfigError


class Tridiagonal:
    """
    Symmetric tridiagonal matrix.

    Attributes:
        diag (np.ndarray): Main diagonal, length n.
        offdiag (np.ndarray): First off-diagonal, length n - 1.
    """

    def __init__(self, diag: np.ndarray, offdiag: np.ndarray):
        diag = np.array(diag, dtype=np.float64, copy=True)
        offdiag = np.array(offdiag, dtype=np.float64, copy=True)

        if diag.ndim != 1 or offdiag.shape != (max(diag.size - 1, 0),):
            raise ConfigError(
                f"Tridiagonal needs n diagonal and n - 1 off-diagonal entries, got {diag.shape} and {offdiag.shape}."
            )

        diag.setflags(write=False)
        offdiag.setflags(write=False)
        self.diag = diag
        self.offdiag = offdiag

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def norm(self) -> float:
        """
        Frobenius norm, the scale eigenvalue accuracy is measured against.
        """
        return float(np.sqrt(np.sum(self.diag**2) + 2.0 * np.sum(self.offdiag**2)))

    def __repr__(self) -> str:
        return f"Tridiagonal(n={self.n})"
