import argparse
import logging
import os
import sys

from dotenv import load_dotenv

from src.cli.commands import cmd_check, cmd_simulate, cmd_spectrum, cmd_sweep, cmd_theory, run_command
from src.cli.oracles import ORACLES

LOG_LEVEL_VARIABLE = "BANDCLT_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

SWEEP_HELP = """\
The sweep table is comma-separated with a header and the columns
  n, b, phi, var_emp, var_theory, rel_gap, stderr
with numbers written to 17 significant digits. simulate appends JSON lines to
<output.directory>/report.jsonl (a header, one statistic line per test function, a timing line);
samples_<phi>.txt and spectrum_replica0.txt hold one number per line."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandclt",
        description="Fluctuations of linear eigenvalue statistics of random band matrices.",
        epilog=SWEEP_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    simulate = commands.add_parser("simulate", help="Run a Monte Carlo experiment from a config file.")
    simulate.add_argument("config", help="Path to the JSON experiment config.")
    simulate.add_argument("--progress", action="store_true", help="Per-replica counter on stderr.")

    theory = commands.add_parser("theory", help="Limiting variance, covariance and finite-n quantities.")
    theory.add_argument("--profile", default="box", help="Band profile family (box, triangle, epanechnikov).")
    theory.add_argument("--kappa4", type=float, default=0.0, help="Fourth cumulant of the entry law.")
    theory.add_argument("--phi", default="x^2", help="const, x, x^k, JSON coefficients or a JSON test function.")
    theory.add_argument("--covariance", nargs=2, metavar=("Z1", "Z2"), help="Print C(z1, z2), e.g. 2i 3i.")
    theory.add_argument("--finite-n", nargs=3, metavar=("N", "B", "ZETA"), help="Print the finite-n triple.")

    sweep = commands.add_parser("sweep", help="Run a config over an (n, b) grid and print the sweep table.")
    sweep.add_argument("config", help="Path to the JSON experiment config.")
    sweep.add_argument("--grid", help="Points as n:b,n:b,...; defaults to the config's own point.")
    sweep.add_argument("--output", help="Write the table to a file instead of stdout.")

    check = commands.add_parser("check", help="Run the numerical oracle suite.")
    check.add_argument("--only", nargs="+", choices=list(ORACLES), help="Run only these oracles.")

    spectrum = commands.add_parser("spectrum", help="Eigenvalues of one seeded matrix of a config.")
    spectrum.add_argument("config", help="Path to the JSON experiment config.")
    spectrum.add_argument("--replica", type=int, default=0, help="Replica whose seed is used.")
    spectrum.add_argument("--output", help="Write the eigenvalues to a file instead of stdout.")

    return parser


def configure_logging():
    level = os.getenv(LOG_LEVEL_VARIABLE, DEFAULT_LOG_LEVEL).upper()
    logging.basicConfig(
        stream=sys.stderr,
        level=level if isinstance(logging.getLevelName(level), int) else DEFAULT_LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "simulate":
        return run_command(cmd_simulate, args.config, args.progress)
    if args.command == "theory":
        return run_command(cmd_theory, args.profile, args.kappa4, args.phi, args.covariance, args.finite_n)
    if args.command == "sweep":
        return run_command(cmd_sweep, args.config, args.grid, args.output)
    if args.command == "check":
        return run_command(cmd_check, args.only)
    return run_command(cmd_spectrum, args.config, args.replica, args.output)


if __name__ == "__main__":
    load_dotenv()
    configure_logging()
    sys.exit(main())
