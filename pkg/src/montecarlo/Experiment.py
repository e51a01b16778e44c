import logging
import sys
import time
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from tqdm import tqdm

from src.ensemble.random_streams import replica_seed
from src.errors import ReplicaError
from src.model.BandMatrixSpec import BandMatrixSpec
from src.model.ExperimentConfig import ExperimentConfig

logger = logging.getLogger(__name__)

CHUNKS_PER_WORKER = 8


class Experiment(ABC):
    """
    Abstract replicated experiment on the band ensemble.

    Replicas are the unit of work. Their results are always gathered in replica order, so the
    outcome does not depend on the worker count or on completion order.

    Attributes:
        config (ExperimentConfig): The experiment to run.
        track_progress (bool): Whether to show a per-replica counter on stderr.
        run_time (int | None): Wall time of the last run in microseconds.
    """

    def __init__(self, config: ExperimentConfig, track_progress: bool = False):
        self.config = config
        self.track_progress = track_progress
        self.run_time: int | None = None

    @abstractmethod
    def _run(self) -> Any:
        """
        Run all replicas and aggregate them.
        """
        pass

    @abstractmethod
    def _convert_result(self, result: Any, run_time: int) -> Any:
        """
        Convert the aggregated result into the experiment's output.
        """
        pass

    def run(self) -> Any:
        result, self.run_time = self.measure_time(self._run)
        logger.info(f"{type(self).__name__} finished in {self.run_time / 1e6:.3f} s")
        return self._convert_result(result, self.run_time)

    def replica_seeds(self) -> list[int]:
        if self.config.seeds is not None:
            return list(self.config.seeds)
        return [replica_seed(self.config.master_seed, r) for r in range(self.config.replicas)]

    def replica_specs(self, config: ExperimentConfig = None) -> list[BandMatrixSpec]:
        config = self.config if config is None else config
        return [config.matrix_spec(seed) for seed in self.replica_seeds()]

    def map_replicas(self, fun: Callable[[Any], Any], items: list[Any]) -> list[Any]:
        """
        Apply a module-level function to every replica's work item, in parallel when the config
        asks for more than one worker. A failure aborts the run with the failing replica's id.
        """

        workers = self.config.worker_count
        progress = dict(total=len(items), file=sys.stderr, disable=not self.track_progress, unit="replica")
        results = []

        try:
            if workers == 1:
                for item in tqdm(items, **progress):
                    results.append(fun(item))
            else:
                chunksize = max(1, len(items) // (workers * CHUNKS_PER_WORKER))
                with ProcessPoolExecutor(max_workers=workers) as executor:
                    for result in tqdm(executor.map(fun, items, chunksize=chunksize), **progress):
                        results.append(result)
        except Exception as e:
            raise ReplicaError(len(results), e) from e

        return results

    @staticmethod
    def measure_time(fun: Callable[..., Any], *args: Any, **kwargs: Any) -> tuple[Any, int]:
        """
        Measure the execution time of a function.
        Returns the result and the execution time in microseconds.
        """

        start_time = time.perf_counter_ns()
        result = fun(*args, **kwargs)
        execution_time = (time.perf_counter_ns() - start_time) // 1000

        return result, execution_time
