import json
import logging
import os
from pathlib import Path

from src.errors import ConfigError
from src.model.ExperimentConfig import DEFAULT_WORKERS, ExperimentConfig

logger = logging.getLogger(__name__)

WORKERS_VARIABLE = "BANDCLT_WORKERS"


def default_workers() -> int:
    """
    Worker count from the environment, used when the config does not set one.
    """

    value = os.getenv(WORKERS_VARIABLE)
    if value is None or value.strip() == "":
        return DEFAULT_WORKERS
    try:
        workers = int(value)
    except ValueError:
        raise ConfigError(f"{WORKERS_VARIABLE} must be an integer, got {value!r}.")
    if workers < 1:
        raise ConfigError(f"{WORKERS_VARIABLE} must be at least 1, got {workers}.")
    return workers


def load_config(path: str | Path) -> ExperimentConfig:
    """
    Read and validate an experiment config document.
    """

    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as file:
            data = json.load(file)
    except FileNotFoundError:
        raise ConfigError(f"Config file {path} does not exist.")
    except OSError as e:
        raise ConfigError(f"Config file {path} cannot be read: {e.strerror}.")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid JSON: {e.msg} at line {e.lineno}.")

    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a JSON object.")

    config = ExperimentConfig.from_dict(data, default_workers())
    logger.info(f"Loaded {config} from {path}")
    return config
