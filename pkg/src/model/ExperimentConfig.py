from __future__ import annotations

import difflib
import hashlib
import json

from src.errors import ConfigError
from src.model.BandMatrixSpec import MAX_SEED, BandMatrixSpec
from src.model.BandwidthRule import BandwidthRule
from src.model.distribution.EntryDistribution import EntryDistribution
from src.model.function.TestFunction import TestFunction
from src.model.profile.BandProfile import BandProfile

DEFAULT_REPLICAS = 4000
DEFAULT_MASTER_SEED = 20240601
DEFAULT_WORKERS = 1
DEFAULT_SOBOLEV_INDEX = 2.5
DEFAULT_OUTPUT_DIRECTORY = "results"
MIN_REPLICAS = 2

SECTION_KEYS = {
    "ensemble": {"n", "b", "c", "theta", "profile", "distribution"},
    "statistics": {"test_functions", "eta", "sobolev_s"},
    "montecarlo": {"replicas", "master_seed", "worker_count", "seeds"},
    "output": {"directory", "dump_samples", "dump_spectra"},
}


def check_keys(data: dict, allowed: set[str], where: str):
    """
    Reject unknown keys, suggesting the closest allowed one.
    """

    if not isinstance(data, dict):
        raise ConfigError(f"Section '{where}' must be an object, got {type(data).__name__}.")

    for key in data:
        if key not in allowed:
            close = difflib.get_close_matches(key, sorted(allowed), n=1)
            hint = f" Did you mean '{close[0]}'?" if close else ""
            raise ConfigError(f"Unknown key '{key}' in section '{where}'.{hint}")


def _integer(value, name: str, lo: int, hi: int = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise ConfigError(f"'{name}' must be an integer, got {value!r}.")
    if value < lo or (hi is not None and value > hi):
        raise ConfigError(f"'{name}' must lie in [{lo}, {hi if hi is not None else 'inf'}], got {value}.")
    return int(value)


def _positive(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
        raise ConfigError(f"'{name}' must be a positive number, got {value!r}.")
    return float(value)


def _flag(value, name: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(f"'{name}' must be true or false, got {value!r}.")
    return value


class ExperimentConfig:
    """
    A Monte Carlo experiment on the band ensemble.

    Attributes:
        n (int): Matrix size.
        bandwidth_rule (BandwidthRule): How b follows from n.
        profile (BandProfile): Band shape u.
        distribution (EntryDistribution): Law of the standardized entries.
        test_functions (list[TestFunction]): Statistics evaluated on every replica.
        replicas (int): Number of replicas R.
        master_seed (int): Seed every replica seed derives from.
        eta (float | None): Poisson smoothing width applied to every test function, if set.
        worker_count (int): Number of worker processes.
        sobolev_s (float): Sobolev index reported for each test function.
        seeds (list[int] | None): Explicit per-replica seeds overriding the derived ones.
        output_directory (str): Where simulate writes its records.
        dump_samples (bool): Whether to write the raw fluctuation samples.
        dump_spectra (bool): Whether to write the spectrum of replica 0.
    """

    def __init__(
        self,
        n: int,
        bandwidth_rule: BandwidthRule,
        profile: BandProfile,
        distribution: EntryDistribution,
        test_functions: list[TestFunction],
        replicas: int = DEFAULT_REPLICAS,
        master_seed: int = DEFAULT_MASTER_SEED,
        eta: float = None,
        worker_count: int = DEFAULT_WORKERS,
        sobolev_s: float = DEFAULT_SOBOLEV_INDEX,
        seeds: list[int] = None,
        output_directory: str = DEFAULT_OUTPUT_DIRECTORY,
        dump_samples: bool = False,
        dump_spectra: bool = False,
    ):
        self.n = _integer(n, "n", 2)
        self.bandwidth_rule = bandwidth_rule
        self.profile = profile
        self.distribution = distribution
        self.test_functions = list(test_functions)
        self.replicas = _integer(replicas, "replicas", MIN_REPLICAS)
        self.master_seed = _integer(master_seed, "master_seed", 0, MAX_SEED)
        self.eta = None if eta is None else _positive(eta, "eta")
        self.worker_count = _integer(worker_count, "worker_count", 1)
        self.sobolev_s = _positive(sobolev_s, "sobolev_s")
        self.output_directory = str(output_directory)
        self.dump_samples = _flag(dump_samples, "dump_samples")
        self.dump_spectra = _flag(dump_spectra, "dump_spectra")

        if not self.test_functions:
            raise ConfigError("At least one test function is required.")
        names = [phi.name for phi in self.test_functions]
        if len(set(names)) != len(names):
            raise ConfigError(f"Test function names must be unique, got {names}.")

        if self.eta is not None:
            for phi in self.test_functions:
                if not phi.is_integrable:
                    raise ConfigError(f"Smoothing width eta needs integrable test functions, got {phi.name}.")

        if seeds is not None:
            seeds = [_integer(seed, "seeds", 0, MAX_SEED) for seed in seeds]
            if len(seeds) != self.replicas:
                raise ConfigError(f"Got {len(seeds)} explicit seeds for {self.replicas} replicas.")
        self.seeds = seeds

        # validates b against n and the profile
        self.matrix_spec()

    @property
    def b(self) -> float:
        return self.bandwidth_rule.bandwidth(self.n)

    def matrix_spec(self, seed: int = 0) -> BandMatrixSpec:
        return BandMatrixSpec(self.n, self.b, self.profile, self.distribution, seed)

    def with_point(self, n: int, b: float) -> ExperimentConfig:
        """
        Same experiment at another (n, b).
        """

        data = self.to_dict()
        data["ensemble"] = {
            key: value for key, value in data["ensemble"].items() if key not in {"b", "c", "theta"}
        }
        data["ensemble"].update({"n": n, "b": b})
        return ExperimentConfig.from_dict(data)

    def with_distribution(self, distribution: EntryDistribution) -> ExperimentConfig:
        data = self.to_dict()
        data["ensemble"]["distribution"] = distribution.to_dict()
        return ExperimentConfig.from_dict(data)

    def to_dict(self) -> dict:
        statistics = {
            "test_functions": [phi.to_dict() for phi in self.test_functions],
            "sobolev_s": self.sobolev_s,
        }
        if self.eta is not None:
            statistics["eta"] = self.eta

        montecarlo = {
            "replicas": self.replicas,
            "master_seed": self.master_seed,
            "worker_count": self.worker_count,
        }
        if self.seeds is not None:
            montecarlo["seeds"] = list(self.seeds)

        return {
            "ensemble": {
                "n": self.n,
                **self.bandwidth_rule.to_dict(),
                "profile": self.profile.to_dict(),
                "distribution": self.distribution.to_dict(),
            },
            "statistics": statistics,
            "montecarlo": montecarlo,
            "output": {
                "directory": self.output_directory,
                "dump_samples": self.dump_samples,
                "dump_spectra": self.dump_spectra,
            },
        }

    def digest(self) -> str:
        """
        SHA-256 of the canonical JSON of everything that determines the results. The output
        section and the worker count do not, so they are left out.
        """

        data = self.to_dict()
        del data["output"]
        del data["montecarlo"]["worker_count"]
        canonical = json.dumps(data, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def __eq__(self, other) -> bool:
        return isinstance(other, ExperimentConfig) and self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"ExperimentConfig(n={self.n}, b={self.b}, replicas={self.replicas}, digest={self.digest()[:12]})"

    @staticmethod
    def from_dict(data: dict, default_workers: int = DEFAULT_WORKERS) -> ExperimentConfig:
        """
        Build a config from its document, rejecting unknown keys at every level.
        """

        check_keys(data, set(SECTION_KEYS), "top level")
        for section in ("ensemble", "statistics"):
            if section not in data:
                raise ConfigError(f"Missing section '{section}'.")
        for section, allowed in SECTION_KEYS.items():
            check_keys(data.get(section, {}), allowed, section)

        ensemble = data["ensemble"]
        statistics = data["statistics"]
        montecarlo = data.get("montecarlo", {})
        output = data.get("output", {})

        for key in ("n", "profile", "distribution"):
            if key not in ensemble:
                raise ConfigError(f"Missing key '{key}' in section 'ensemble'.")
        if "c" in ensemble and "theta" not in ensemble:
            raise ConfigError("Key 'c' in section 'ensemble' needs 'theta'.")

        if not isinstance(statistics.get("test_functions"), list):
            raise ConfigError("Section 'statistics' needs a list 'test_functions'.")

        rule = BandwidthRule(ensemble.get("b"), ensemble.get("c"), ensemble.get("theta"))
        return ExperimentConfig(
            ensemble["n"],
            rule,
            BandProfile.from_dict(ensemble["profile"]),
            EntryDistribution.from_dict(ensemble["distribution"]),
            [TestFunction.from_dict(phi) for phi in statistics["test_functions"]],
            montecarlo.get("replicas", DEFAULT_REPLICAS),
            montecarlo.get("master_seed", DEFAULT_MASTER_SEED),
            statistics.get("eta"),
            montecarlo.get("worker_count", default_workers),
            statistics.get("sobolev_s", DEFAULT_SOBOLEV_INDEX),
            montecarlo.get("seeds"),
            output.get("directory", DEFAULT_OUTPUT_DIRECTORY),
            output.get("dump_samples", False),
            output.get("dump_spectra", False),
        )
