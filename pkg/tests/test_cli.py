"""Tests for the command line interface."""

import json
import unittest
from pathlib import Path

from click.testing import CliRunner, Result

from pypersuade.cli import main, parse_edge, parse_prior
from pypersuade.game.errors import GameValidationError
from tests.games import BAD_PRIOR_PATH, EDGE_TIE_PATH, JUDGE_PATH, QUADRATIC_PATH, guilty, judge


class TestParsing(unittest.TestCase):
    """Option parsing helpers."""

    def test_prior(self) -> None:
        """Binary games accept a single probability."""
        self.assertEqual(guilty("1/2"), parse_prior("1/2", judge()))
        self.assertEqual(guilty("1/4"), parse_prior("3/4, 1/4", judge()))
        for bad in ("1/2,1/3", "1/3,1/3,1/3", "x"):
            with self.subTest(prior=bad), self.assertRaises(GameValidationError):
                parse_prior(bad, judge())

    def test_edge(self) -> None:
        """Edges are two comma-separated indices."""
        self.assertEqual((0, 2), parse_edge("0,2"))
        with self.assertRaises(GameValidationError):
            parse_edge("0")


class TestCommands(unittest.TestCase):
    """End-to-end runs of every command."""

    def setUp(self) -> None:
        """Create a runner."""
        self.runner = CliRunner()

    def invoke(self, *args: object, exit_code: int = 0) -> Result:
        """Run the command line and check its exit status."""
        result = self.runner.invoke(main, [str(arg) for arg in args])
        self.assertEqual(exit_code, result.exit_code, msg=result.output)
        return result

    def invoke_json(self, *args: object) -> dict:
        """Run a command in JSON mode and parse its report."""
        return json.loads(self.invoke(*args, "--format", "json").stdout)

    def test_interval(self) -> None:
        """The judge interval, at the document prior and at an override."""
        report = self.invoke_json("interval", JUDGE_PATH)
        self.assertEqual("0/1", report["lo"]["exact"])
        self.assertEqual("1/2", report["hi"]["exact"])
        override = self.invoke_json("interval", JUDGE_PATH, "--prior", "3/4")
        self.assertEqual("1/1", override["hi"]["exact"])
        self.assertFalse(override["lo_attained"])

    def test_human_format(self) -> None:
        """Human output shows exact values with approximations."""
        result = self.invoke("interval", JUDGE_PATH)
        self.assertIn("hi: 1/2 (0.5)", result.stdout)

    def test_invalid_input(self) -> None:
        """Malformed priors exit with status 2 and name the field."""
        result = self.invoke("interval", BAD_PRIOR_PATH, exit_code=2)
        self.assertIn("prior", result.stderr)
        result = self.invoke("interval", JUDGE_PATH, "--prior", "1/2,1/3", exit_code=2)
        self.assertIn("prior", result.stderr)

    def test_undecodable_file(self) -> None:
        """Game files that are not UTF-8 exit with status 2 and name the document."""
        with self.runner.isolated_filesystem():
            Path("latin.json").write_bytes(b'{"states": ["\xff\xfe"]}')
            result = self.invoke("interval", "latin.json", exit_code=2)
        self.assertIn("document", result.stderr)

    def test_analyze(self) -> None:
        """Verdicts for a non-unique and a unique game."""
        self.assertEqual("non_unique", self.invoke_json("analyze", JUDGE_PATH)["verdict"])
        report = self.invoke_json("analyze", QUADRATIC_PATH)
        self.assertEqual(("unique", "pubr_theorem"), (report["verdict"], report["winning_test"]))

    def test_checks(self) -> None:
        """Each test of the battery runs on its own."""
        self.assertEqual({"no_relevant_ties": False}, self.invoke_json("check", "ties", JUDGE_PATH))
        self.assertEqual(["acquit"], self.invoke_json("check", "pubr", JUDGE_PATH)["potentially_unique_actions"])
        self.assertFalse(self.invoke_json("check", "generic", JUDGE_PATH)["in_u_r"])
        self.assertEqual("yes", self.invoke_json("check", "ordered", EDGE_TIE_PATH)["is_ordered"])
        self.assertTrue(self.invoke_json("check", "global", QUADRATIC_PATH)["global_uniqueness"])

    def test_witness(self) -> None:
        """A witness for 1/4 mixes the tie-breaking rules with weight 3/4."""
        report = self.invoke_json("witness", JUDGE_PATH, "--target", "1/4")
        self.assertEqual("3/4", report["zeta"]["exact"])
        self.assertEqual("1/4", report["realized_payoff"]["exact"])
        self.invoke("witness", JUDGE_PATH, "--target", "1", exit_code=2)

    def test_credibility(self) -> None:
        """Bounds in a report and as a table."""
        report = self.invoke_json("credibility", JUDGE_PATH, "--chi", "99/100")
        self.assertEqual("-1099/100000", report["bounds"][0]["lower_bound"]["exact"])
        self.assertFalse(report["strongly_robust"])
        table = self.invoke("credibility", JUDGE_PATH, "--chi", "0", "--chi", "1", "--table").stdout
        self.assertEqual(
            ["chi,lower_bound,chi_approx,lower_bound_approx", "0/1,-1/1,0,-1", "1/1,-1/1000,1,-0.001"],
            table.splitlines(),
        )
        self.invoke("credibility", JUDGE_PATH, "--chi", "2", exit_code=2)

    def test_figure(self) -> None:
        """Figure tables go to standard output; the slice notice goes to standard error."""
        result = self.invoke("figure", JUDGE_PATH, "--n", "3")
        self.assertEqual(4, len(result.stdout.splitlines()))
        result = self.invoke("figure", QUADRATIC_PATH, "--n", "3", "--edge", "0,2")
        self.assertIn("slice from 0 (mu=0) to 2 (mu=1)", result.stderr)
        self.assertTrue(result.stdout.startswith("mu,v,w,cavv,cavw"))
        self.invoke("figure", QUADRATIC_PATH, "--n", "3", exit_code=2)

    def test_figure_out(self) -> None:
        """A failed figure leaves the output path alone; a good one writes the table there."""
        with self.runner.isolated_filesystem():
            self.invoke("figure", QUADRATIC_PATH, "--n", "3", "--out", "fresh.csv", exit_code=2)
            self.assertFalse(Path("fresh.csv").exists())
            Path("kept.csv").write_text("previous\n")
            self.invoke("figure", QUADRATIC_PATH, "--n", "3", "--out", "kept.csv", exit_code=2)
            self.assertEqual("previous\n", Path("kept.csv").read_text())
            result = self.invoke("figure", JUDGE_PATH, "--n", "3", "--out", "judge.csv")
            self.assertEqual("", result.stdout)
            self.assertEqual(4, len(Path("judge.csv").read_text().splitlines()))

    def test_oracle(self) -> None:
        """Grid estimates next to the exact interval."""
        report = self.invoke_json("oracle", JUDGE_PATH, "--n", "4")
        self.assertEqual("0/1", report["lower"]["value"]["exact"])
        self.assertEqual("1/2", report["upper"]["value"]["exact"])
        self.assertEqual("1/2", report["exact"]["hi"]["exact"])
        report = self.invoke_json("oracle", JUDGE_PATH, "--n", "4", "--no-exact")
        self.assertNotIn("exact", report)
