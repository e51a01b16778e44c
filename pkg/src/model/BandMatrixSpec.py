from __future__ import annotations

import math

from src.errors import ConfigError
from src.model.distribution.EntryDistribution import EntryDistribution
from src.model.profile.BandProfile import BandProfile

MIN_BANDWIDTH = 2.0
MAX_SEED = 2**64 - 1


def half_bandwidth(profile: BandProfile, b: float) -> int:
    """
    Number of nonzero off-diagonals w = floor(C* b), tolerant to rounding in the product.
    """
    return math.floor(profile.support_radius * b * (1 + 1e-12))


class BandMatrixSpec:
    """
    Everything needed to draw one matrix of the band ensemble.

    Attributes:
        n (int): Matrix size.
        b (float): Bandwidth parameter, not forced to be an integer.
        profile (BandProfile): Band shape u.
        distribution (EntryDistribution): Law of the standardized entries.
        seed (int): Unsigned 64-bit seed of the entry streams.
    """

    def __init__(
        self,
        n: int,
        b: float,
        profile: BandProfile,
        distribution: EntryDistribution,
        seed: int = 0,
    ):
        if int(n) != n or n < 1:
            raise ConfigError(f"Matrix size n must be a positive integer, got {n}.")
        if not b >= MIN_BANDWIDTH:
            raise ConfigError(f"Bandwidth b must be at least {MIN_BANDWIDTH}, got {b}.")
        if int(seed) != seed or not 0 <= seed <= MAX_SEED:
            raise ConfigError(f"Seed must be an unsigned 64-bit integer, got {seed}.")

        self.n = int(n)
        self.b = float(b)
        self.profile = profile
        self.distribution = distribution
        self.seed = int(seed)
        self.half_bandwidth = half_bandwidth(profile, self.b)

        if self.half_bandwidth >= self.n:
            raise ConfigError(
                f"Band of half-width {self.half_bandwidth} does not fit inside a matrix of size {self.n}."
            )

    def with_seed(self, seed: int) -> BandMatrixSpec:
        return BandMatrixSpec(self.n, self.b, self.profile, self.distribution, seed)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "profile": self.profile.to_dict(),
            "distribution": self.distribution.to_dict(),
            "seed": self.seed,
        }

    def __repr__(self) -> str:
        return f"BandMatrixSpec({self.to_dict()})"
