import unittest
from unittest import mock

from ddt import data, ddt

from src.cli import oracles
from src.cli.commands import EXIT_OK, cmd_check
from src.cli.oracles import ORACLES, run_oracles


def broken() -> tuple[bool, str]:
    raise ZeroDivisionError("division by zero")


@ddt
class TestOracles(unittest.TestCase):
    @data(
        "stieltjes_identity",
        "derivative_complex_step",
        "variance_special_cases",
        "resolvent_statistic_identity",
        "normality_null",
    )
    def test_fast_oracles_pass(self, name):
        [(result_name, passed, detail)] = run_oracles([name])
        self.assertEqual(result_name, name)
        self.assertTrue(passed, detail)

    def test_eigensolver_equivalence_on_fewer_matrices(self):
        passed, detail = oracles.eigensolver_equivalence(count=20, max_size=24)
        self.assertTrue(passed, detail)

    def test_raising_oracle_fails(self):
        with mock.patch.dict(ORACLES, {"broken": broken}), self.assertLogs("src.cli.oracles", level="ERROR"):
            [(name, passed, detail)] = run_oracles(["broken"])
        self.assertEqual(name, "broken")
        self.assertFalse(passed)
        self.assertIn("ZeroDivisionError", detail)

    def test_check_exit_code(self):
        with mock.patch("builtins.print"):
            self.assertEqual(cmd_check(["stieltjes_identity", "variance_special_cases"]), EXIT_OK)


if __name__ == "__main__":
    unittest.main()
