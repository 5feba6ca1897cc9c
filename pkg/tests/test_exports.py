"""Tests for report documents and tables."""

import io
import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from pypersuade.concavify.envelope import equilibrium_interval
from pypersuade.concavify.figure import figure_points
from pypersuade.concavify.witness import equilibrium_witness
from pypersuade.credibility.robustness import robustness_verdict
from pypersuade.diagnostics.genericity import genericity_check
from pypersuade.diagnostics.verdict import analyze
from pypersuade.exports.data_tables import write_table
from pypersuade.exports.data_tables.credibility import CredibilityTableBuilder
from pypersuade.exports.data_tables.figure import FigureTableBuilder, emit_figure
from pypersuade.exports.reports import (
    format_human,
    genericity_entry,
    interval_report,
    oracle_report,
    verdict_report,
    witness_report,
)
from pypersuade.game.errors import ParameterError
from pypersuade.game.rationals import parse_rational
from pypersuade.oracle.grid import brute_force_interval
from tests.games import judge, quadratic

F = Fraction


class TestReports(unittest.TestCase):
    """Structured documents."""

    def setUp(self) -> None:
        """Judge game and its interval."""
        self.game = judge()
        self.interval = equilibrium_interval(self.game)

    def test_interval(self) -> None:
        """Rationals carry exact strings that parse back."""
        report = interval_report(self.game, self.interval)
        self.assertEqual({"exact": "1/2", "approx": "0.5"}, report["hi"])
        self.assertEqual(F(0), parse_rational(report["lo"]["exact"]))
        self.assertEqual({"exact": "3/4", "approx": "0.75"}, report["prior"]["innocent"])
        self.assertFalse(report["unique"])
        self.assertEqual(2, len(report["hi_witness"]))

    def test_json_serializable(self) -> None:
        """Every report dumps to JSON."""
        documents = [
            interval_report(self.game, self.interval),
            verdict_report(self.game, analyze(self.game)),
            witness_report(self.game, equilibrium_witness(self.game, None, F(1, 4))),
            genericity_entry(self.game, genericity_check(self.game)),
            oracle_report(self.game, brute_force_interval(self.game, None, 4), self.interval),
        ]
        for document in documents:
            self.assertIsInstance(json.dumps(document, sort_keys=True), str)

    def test_verdict(self) -> None:
        """The verdict document names the verdict, the winning test and all evidence."""
        report = verdict_report(self.game, analyze(self.game))
        self.assertEqual("non_unique", report["verdict"])
        self.assertEqual("none", report["winning_test"])
        self.assertEqual("no", report["evidence"]["ordered"]["is_ordered"])
        self.assertEqual({"exact": "1/2", "approx": "0.5"}, report["interval"]["width"])

    def test_genericity_order(self) -> None:
        """Failing indices name the action and the states."""
        report = genericity_entry(self.game, genericity_check(self.game))
        self.assertIn({"action": "death", "states": ["guilty"]}, report["failing_indices"])


class TestFormatHuman(unittest.TestCase):
    """Indented text rendering."""

    def test_scalars_and_lists(self) -> None:
        """Rationals, booleans, missing values and lists."""
        document = {"a": {"exact": "1/2", "approx": "0.5"}, "b": True, "c": None, "d": [1, 2]}
        self.assertEqual(["a: 1/2 (0.5)", "b: yes", "c: -", "d:", "  - 1", "  - 2"], format_human(document))

    def test_nested(self) -> None:
        """Policies render one support point per dash."""
        lines = format_human(interval_report(judge(), equilibrium_interval(judge())))
        self.assertIn("hi: 1/2 (0.5)", lines)
        self.assertIn("hi_witness:", lines)
        self.assertIn("  - belief:", lines)


class TestTables(unittest.TestCase):
    """Comma-separated tables."""

    def test_credibility_table(self) -> None:
        """One row per credibility level with exact and approximate columns."""
        builder = CredibilityTableBuilder(robustness_verdict(judge(), chi_grid=[F(0), F(1)]))
        rows = builder.build_credibility_table()
        self.assertEqual(
            {"chi": "0/1", "lower_bound": "-1/1", "chi_approx": "0", "lower_bound_approx": "-1"},
            rows[0],
        )
        self.assertEqual("-1/1000", rows[1]["lower_bound"])

    def test_figure_table(self) -> None:
        """Header first, then one row per position."""
        builder = FigureTableBuilder(figure_points(judge(), 3))
        stream = io.StringIO()
        write_table(builder.build_figure_table(), builder.fieldnames, stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual("mu,v,w,cavv,cavw,mu_approx,v_approx,w_approx,cavv_approx,cavw_approx", lines[0])
        self.assertEqual(4, len(lines))
        self.assertTrue(lines[2].startswith("1/2,1/1,-1/1,1/1,0/1,"))

    def test_emit_figure_to_path(self) -> None:
        """The figure is written to a file and its rows are returned."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "figure.csv"
            rows = emit_figure(judge(), 3, path)
            lines = path.read_text().splitlines()
        self.assertEqual(len(rows) + 1, len(lines))
        self.assertEqual({"mu": "1/2", "cavv": "1/1", "cavw": "0/1"}, {k: rows[1][k] for k in ("mu", "cavv", "cavw")})

    def test_emit_figure_needs_edge(self) -> None:
        """Games with three states need an explicit edge."""
        with self.assertRaises(ParameterError):
            emit_figure(quadratic(), 3, io.StringIO())
