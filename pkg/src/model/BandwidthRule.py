from __future__ import annotations

import numpy as np

from src.errors import ConfigError


class BandwidthRule:
    """
    How the bandwidth parameter b is chosen for a matrix of size n: either a fixed value, or the
    power law b = c * n^theta with theta in (0, 1), which realizes b -> infinity with b / n -> 0.

    Attributes:
        b (float | None): Explicit bandwidth, if given.
        coefficient (float | None): The prefactor c of the power law.
        exponent (float | None): The exponent theta of the power law.
    """

    def __init__(self, b: float = None, coefficient: float = None, exponent: float = None):
        if b is None and exponent is None:
            raise ConfigError("A bandwidth rule needs either 'b' or 'theta'.")
        if b is not None and exponent is not None:
            raise ConfigError("Give either 'b' or 'theta', not both.")

        if b is not None and (not np.isfinite(b) or b <= 0):
            raise ConfigError(f"Bandwidth b must be positive, got {b}.")

        if exponent is not None:
            if not 0 < exponent < 1:
                raise ConfigError(f"Bandwidth exponent theta must lie in (0, 1), got {exponent}.")
            coefficient = 1.0 if coefficient is None else coefficient
            if not np.isfinite(coefficient) or coefficient <= 0:
                raise ConfigError(f"Bandwidth coefficient c must be positive, got {coefficient}.")

        self.b = None if b is None else float(b)
        self.coefficient = None if coefficient is None else float(coefficient)
        self.exponent = None if exponent is None else float(exponent)

    @property
    def is_explicit(self) -> bool:
        return self.b is not None

    def bandwidth(self, n: int) -> float:
        if self.is_explicit:
            return self.b
        return self.coefficient * float(n) ** self.exponent

    def to_dict(self) -> dict:
        if self.is_explicit:
            return {"b": self.b}
        return {"c": self.coefficient, "theta": self.exponent}

    def __eq__(self, other) -> bool:
        return isinstance(other, BandwidthRule) and self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"BandwidthRule({self.to_dict()})"

    @staticmethod
    def from_dict(data: dict) -> BandwidthRule:
        return BandwidthRule(data.get("b"), data.get("c"), data.get("theta"))
