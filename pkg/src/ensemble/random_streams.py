"""
Counter-based random streams. Every matrix entry gets its own uniform variate, computed by hashing
(seed, stream, i, j) through the SplitMix64 finalizer, so a sampled matrix does not depend on the
order in which entries are visited or on the number of workers.
"""

from enum import IntEnum

import numpy as np

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX_MULTIPLIER_1 = np.uint64(0xBF58476D1CE4E5B9)
MIX_MULTIPLIER_2 = np.uint64(0x94D049BB133111EB)
MASK64 = 2**64 - 1


class Stream(IntEnum):
    BAND = 0
    CORNER = 1


def splitmix64(x: np.ndarray) -> np.ndarray:
    """
    SplitMix64 output function applied elementwise to uint64 values (wrapping arithmetic).
    """

    z = np.asarray(x, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = z + GOLDEN_GAMMA
        z = (z ^ (z >> np.uint64(30))) * MIX_MULTIPLIER_1
        z = (z ^ (z >> np.uint64(27))) * MIX_MULTIPLIER_2
    return z ^ (z >> np.uint64(31))


def stream_key(seed: int, stream: Stream) -> np.uint64:
    seed_bits = np.array([seed & MASK64], dtype=np.uint64)
    stream_bits = splitmix64(np.array([int(stream)], dtype=np.uint64))
    return splitmix64(seed_bits ^ stream_bits)[0]


def entry_uniforms(seed: int, stream: Stream, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """
    Uniform variates in the open interval (0, 1), one per (row, col) pair.
    The pair is ordered first, so (i, j) and (j, i) share a variate.
    """

    rows = np.asarray(rows, dtype=np.int64)
    cols = np.asarray(cols, dtype=np.int64)
    low = np.minimum(rows, cols).astype(np.uint64)
    high = np.maximum(rows, cols).astype(np.uint64)

    key = stream_key(seed, stream)
    bits = splitmix64(splitmix64(key ^ low) ^ high)

    # top 53 bits, shifted half a step off zero
    return ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def replica_seed(master_seed: int, replica_id: int) -> int:
    """
    Seed of one Monte Carlo replica, a pure function of (master seed, replica id).
    """

    base = splitmix64(np.array([master_seed & MASK64], dtype=np.uint64))
    with np.errstate(over="ignore"):
        counter = base + np.uint64(replica_id) * GOLDEN_GAMMA
    return int(splitmix64(counter)[0])
