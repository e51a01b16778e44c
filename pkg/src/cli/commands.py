import json
import logging
import re
import sys
from pathlib import Path
from typing import Callable

from src.bandeig.eigen_functions import dump_spectrum, eigenvalues
from src.cli.config_file import load_config
from src.cli.oracles import run_oracles
from src.cli.records import covariance_record, finite_n_record, theory_record
from src.ensemble.random_streams import replica_seed
from src.ensemble.sampling import sample_band_matrix
from src.errors import BandCLTError, ConfigError
from src.model.FiniteNOperator import FiniteNOperator
from src.model.function.PolynomialFunction import PolynomialFunction
from src.model.function.TestFunction import TestFunction
from src.model.profile.BandProfile import BandProfile
from src.montecarlo.ReplicaExperiment import dump_first_spectrum, dump_samples, run_experiment
from src.montecarlo.sweep import gap_trend, sweep, write_sweep_table
from src.theory.covariance import covariance_resolvents
from src.theory.finite_n import finite_n_sigma
from src.theory.variance import clt_variance, kernel_truncation_radius

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3
EXIT_ORACLE = 4

REPORT_FILE = "report"
POWER_PATTERN = re.compile(r"^x\^(\d+)$")


def parse_test_function(text: str) -> TestFunction:
    """
    A test function from the command line: 'const', 'x', 'x^k', a JSON number (constant), a JSON
    list of ascending polynomial coefficients, or a JSON test function record.
    """

    text = text.strip()
    if text == "const":
        return PolynomialFunction([1.0], name="const")
    if text == "x":
        return PolynomialFunction([0.0, 1.0])
    match = POWER_PATTERN.match(text)
    if match:
        power = int(match.group(1))
        return PolynomialFunction([0.0] * power + [1.0])

    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise ConfigError(f"Cannot read test function {text!r}; use const, x, x^k or JSON.")

    if isinstance(data, bool):
        raise ConfigError(f"Cannot read test function {text!r}; use const, x, x^k or JSON.")
    if isinstance(data, (int, float)):
        return PolynomialFunction([float(data)])
    if isinstance(data, list):
        return PolynomialFunction(data)
    if isinstance(data, dict):
        return TestFunction.from_dict(data)
    raise ConfigError(f"Cannot read test function {text!r}; use const, x, x^k or JSON.")


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise ConfigError(f"Cannot read complex number {text!r}.")


def parse_grid(text: str) -> list[tuple[int, float]]:
    """
    Grid points written as 'n:b,n:b,...'; an empty string is the empty grid.
    """

    grid = []
    for point in filter(None, (p.strip() for p in text.split(","))):
        try:
            n, b = point.split(":")
            grid.append((int(n), float(b)))
        except ValueError:
            raise ConfigError(f"Grid point {point!r} is not of the form n:b.")
    return grid


def cmd_simulate(config_path: str, track_progress: bool = False) -> int:
    config = load_config(config_path)
    report = run_experiment(config, track_progress)

    path = report.save_records(REPORT_FILE)
    if config.dump_samples:
        dump_samples(report, config.output_directory)
    if config.dump_spectra:
        dump_first_spectrum(report, config.output_directory)

    for summary in report.statistics:
        print(
            f"{summary.name}: var_emp={summary.empirical_variance:.6g} "
            f"var_theory={summary.theory.total:.6g} rel_gap={summary.relative_gap:.3g}"
        )
    print(f"Report appended to {path}")
    return EXIT_OK


def cmd_theory(
    profile: str,
    kappa4: float,
    phi: str,
    covariance: list[str] = None,
    finite_n: list[str] = None,
) -> int:
    """
    Print the limiting variance breakdown of phi as a JSON record, and optionally C(z1, z2) and the
    finite-n triple (lhs, rhs, limit) at (n, b, zeta).
    """

    band_profile = BandProfile.from_dict({"family": profile})
    function = parse_test_function(phi)

    breakdown = clt_variance(function, band_profile, kappa4)
    print(theory_record(function, band_profile, kappa4, breakdown, kernel_truncation_radius(band_profile)))

    if covariance is not None:
        z1, z2 = (parse_complex(z) for z in covariance)
        print(covariance_record(z1, z2, covariance_resolvents(z1, z2, band_profile, kappa4)))

    if finite_n is not None:
        n_text, b_text, zeta_text = finite_n
        try:
            n, b = int(n_text), float(b_text)
        except ValueError:
            raise ConfigError(f"Finite-n point needs an integer n and a real b, got ({n_text}, {b_text}).")
        zeta = parse_complex(zeta_text)
        lhs, rhs, limit = finite_n_sigma(FiniteNOperator(n, b, band_profile), zeta)
        print(finite_n_record(n, b, zeta, lhs, rhs, limit))

    return EXIT_OK


def cmd_sweep(config_path: str, grid: str = None, destination: str = None) -> int:
    config = load_config(config_path)
    points = [(config.n, config.b)] if grid is None else parse_grid(grid)

    table = sweep(config, points)
    write_sweep_table(table, destination)

    if len(points) > 1:
        for name, decreasing in gap_trend(table, config.replicas).items():
            logger.info(f"Relative gap of {name} non-increasing along the grid: {decreasing}")
    return EXIT_OK


def cmd_check(names: list[str] = None) -> int:
    failed = 0
    for name, passed, detail in run_oracles(names):
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        failed += not passed
    return EXIT_OK if failed == 0 else EXIT_ORACLE


def cmd_spectrum(config_path: str, replica: int = 0, output: str = None) -> int:
    """
    Eigenvalues of the matrix of one replica of the config, one per line with 17 significant digits.
    """

    config = load_config(config_path)
    if not 0 <= replica < config.replicas:
        raise ConfigError(f"Replica must lie in [0, {config.replicas}), got {replica}.")
    seed = config.seeds[replica] if config.seeds is not None else replica_seed(config.master_seed, replica)

    spectrum = eigenvalues(sample_band_matrix(config.matrix_spec(seed)))
    if output is not None:
        dump_spectrum(spectrum, Path(output))
    else:
        for value in spectrum.eigenvalues:
            print(f"{value:.17g}")
    return EXIT_OK


def run_command(command: Callable[..., int], *args, **kwargs) -> int:
    """
    Run a subcommand and map its failure to an exit code with a one-line message on stderr.
    """

    try:
        return command(*args, **kwargs)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except (BandCLTError, RuntimeError, ValueError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RUNTIME
