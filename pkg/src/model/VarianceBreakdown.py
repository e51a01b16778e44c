from __future__ import annotations

import numpy as np

from src.errors import InvariantError

NEGATIVITY_TOLERANCE = 1e-12


class VarianceBreakdown:
    """
    Limiting variance of a linear eigenvalue statistic, split by origin.

    Attributes:
        kernel_term (float): Double integral against the log-modulus kernel.
        kappa4_term (float): Fourth-cumulant correction, proportional to (u, u).
        u0_term (float): Diagonal correction, proportional to u(0).
        total (float): Sum of the three terms.
        truncation_order (int): Number of cosine harmonics kept in the kernel series (0 if not a series).
    """

    def __init__(
        self, kernel_term: float, kappa4_term: float, u0_term: float, truncation_order: int = 0
    ):
        self.kernel_term = float(kernel_term)
        self.kappa4_term = float(kappa4_term)
        self.u0_term = float(u0_term)
        self.total = self.kernel_term + self.kappa4_term + self.u0_term
        self.truncation_order = int(truncation_order)

        values = (self.kernel_term, self.kappa4_term, self.u0_term)
        if not np.all(np.isfinite(values)):
            raise InvariantError(f"Variance breakdown has non-finite terms: {values}.")
        if self.kernel_term < -NEGATIVITY_TOLERANCE:
            raise InvariantError(f"Kernel term of the variance is negative: {self.kernel_term}.")
        # kappa4 >= -2 for any standardized law, so the total cannot go negative either
        if self.total < -NEGATIVITY_TOLERANCE:
            raise InvariantError(f"Limiting variance is negative: {self.total}.")

    def to_dict(self) -> dict:
        return {
            "kernel_term": self.kernel_term,
            "kappa4_term": self.kappa4_term,
            "u0_term": self.u0_term,
            "total": self.total,
        }

    @staticmethod
    def from_dict(data: dict) -> VarianceBreakdown:
        return VarianceBreakdown(data["kernel_term"], data["kappa4_term"], data["u0_term"])

    def __eq__(self, other) -> bool:
        return isinstance(other, VarianceBreakdown) and self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return (
            f"VarianceBreakdown(kernel_term={self.kernel_term}, kappa4_term={self.kappa4_term}, "
            f"u0_term={self.u0_term}, total={self.total})"
        )
