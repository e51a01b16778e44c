import numpy as np
from numpy.polynomial import polynomial

from src.errors import ConfigError
from src.model.function.TestFunction import TestFunction, FunctionFamily


class PolynomialFunction(TestFunction):
    """
    phi(x) = sum_m coefficients[m] x^m. Not integrable unless identically zero.
    """

    family = FunctionFamily.POLYNOMIAL

    def __init__(self, coefficients: list[float], name: str = None):
        try:
            coefficients = [float(c) for c in coefficients]
        except (TypeError, ValueError):
            raise ConfigError(f"Polynomial coefficients must be numbers, got {coefficients}.")
        if not coefficients or not np.all(np.isfinite(coefficients)):
            raise ConfigError(f"Polynomial coefficients must be finite and non-empty, got {coefficients}.")

        self.coefficients = coefficients
        super().__init__(name)

    def value(self, x: np.ndarray) -> np.ndarray:
        return polynomial.polyval(x, self.coefficients)

    @property
    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coefficients)

    @property
    def is_integrable(self) -> bool:
        return self.is_zero

    def effective_support(self) -> tuple[float, float]:
        if self.is_zero:
            return 0.0, 0.0
        return -np.inf, np.inf

    def default_name(self) -> str:
        terms = []
        for power, c in enumerate(self.coefficients):
            if c == 0.0:
                continue
            if power == 0:
                terms.append(f"{c:g}")
                continue
            monomial = "x" if power == 1 else f"x^{power}"
            terms.append(monomial if c == 1.0 else f"{c:g}*{monomial}")
        return "+".join(terms) or "0"

    def parameters(self) -> dict:
        return {"coefficients": self.coefficients}
