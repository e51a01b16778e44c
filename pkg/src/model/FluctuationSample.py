import numpy as np

from src.errors import InvariantError


class FluctuationSample:
    """
    One realization of the centered and scaled statistic sqrt(b / n) (N_n[phi] - mean).

    Attributes:
        value (float): The fluctuation.
        replica_id (int): Replica that produced it.
        seed (int): Seed of that replica's matrix.
    """

    def __init__(self, value: float, replica_id: int, seed: int):
        if not np.isfinite(value):
            raise InvariantError(f"Fluctuation of replica {replica_id} is not finite: {value}.")

        self.value = float(value)
        self.replica_id = int(replica_id)
        self.seed = int(seed)

    def __eq__(self, other) -> bool:
        return isinstance(other, FluctuationSample) and vars(self) == vars(other)

    def __repr__(self) -> str:
        return f"FluctuationSample(value={self.value}, replica_id={self.replica_id})"
