import contextlib
import io
import json
import math
import tempfile
import unittest
from pathlib import Path

from src.cli.commands import EXIT_CONFIG, EXIT_OK
from src.main import build_parser, main
from src.model.ExperimentReport import ExperimentReport


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestMain(unittest.TestCase):
    def setUp(self):
        temporary = tempfile.TemporaryDirectory()
        self.addCleanup(temporary.cleanup)
        self.directory = Path(temporary.name)

    def config(self, **montecarlo) -> str:
        document = {
            "ensemble": {"n": 32, "b": 4, "profile": {"family": "box"}, "distribution": {"family": "gaussian"}},
            "statistics": {"test_functions": [{"family": "polynomial", "coefficients": [0.0, 0.0, 1.0]}]},
            "montecarlo": {"replicas": 8, "master_seed": 11, **montecarlo},
            "output": {"directory": str(self.directory / "out"), "dump_samples": True, "dump_spectra": True},
        }
        path = self.directory / "config.json"
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    def test_missing_config(self):
        code, _, err = run("simulate", str(self.directory / "absent.json"))
        self.assertEqual(code, EXIT_CONFIG)
        self.assertIn("absent.json", err)

    def test_unknown_key_suggests_the_right_one(self):
        code, _, err = run("simulate", self.config(replica=3))
        self.assertEqual(code, EXIT_CONFIG)
        self.assertIn("replicas", err)
        self.assertEqual(len(err.strip().splitlines()), 1)

    def test_simulate_writes_report(self):
        code, out, _ = run("simulate", self.config())
        self.assertEqual(code, EXIT_OK)
        self.assertIn("x^2: var_emp=", out)

        output = self.directory / "out"
        report = ExperimentReport.from_file(output / "report.jsonl")
        self.assertEqual(report.statistic("x^2").sample_count, 8)
        self.assertEqual(len((output / "samples_x_2.txt").read_text().split()), 8)
        self.assertEqual(len((output / "spectrum_replica0.txt").read_text().split()), 32)

    def test_empty_sweep_prints_header(self):
        code, out, _ = run("sweep", self.config(), "--grid", "")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "n,b,phi,var_emp,var_theory,rel_gap,stderr")

    def test_sweep_to_file(self):
        destination = self.directory / "sweep.csv"
        code, _, _ = run("sweep", self.config(), "--grid", "32:4,48:4", "--output", str(destination))
        self.assertEqual(code, EXIT_OK)
        lines = destination.read_text().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("32,4,x^2,"))

    def test_theory(self):
        code, out, _ = run("theory", "--profile", "epanechnikov", "--phi", "x")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["record"], "theory")

    def test_theory_covariance_close_to_the_cut(self):
        code, out, _ = run("theory", "--covariance", "1+0.01i", "1-0.01i")
        self.assertEqual(code, EXIT_OK)
        record = json.loads(out.splitlines()[1])
        self.assertEqual(record["record"], "covariance")
        self.assertTrue(all(math.isfinite(part) for part in record["value"]))

    def test_bad_theory_input(self):
        code, _, err = run("theory", "--phi", "sin(x)")
        self.assertEqual(code, EXIT_CONFIG)
        self.assertTrue(err.startswith("error: "))

    def test_check_subset(self):
        code, out, _ = run("check", "--only", "stieltjes_identity")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("PASS stieltjes_identity"))

    def test_parser_requires_a_command(self):
        with contextlib.redirect_stderr(io.StringIO()), self.assertRaises(SystemExit):
            build_parser().parse_args([])


if __name__ == "__main__":
    unittest.main()
