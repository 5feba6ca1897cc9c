"""Tests for credibility bounds."""

import unittest
from fractions import Fraction

from pypersuade.credibility.robustness import (
    chi_one_payoff_set,
    credibility_lower_bound,
    robustness_verdict,
)
from pypersuade.game.errors import ParameterError, StateDependentSenderError
from pypersuade.game.model import Belief, GameSpec, Label
from tests.games import edge_tie, judge, quadratic

F = Fraction


class TestCredibility(unittest.TestCase):
    """Lower bounds on sender payoffs under partial credibility."""

    def test_judge_bound(self) -> None:
        """At 99% credibility the judge bound mixes w-hat minus the slack with min w."""
        self.assertEqual(F(-1099, 100000), credibility_lower_bound(judge(), None, F(99, 100)))
        self.assertEqual(F(-1), credibility_lower_bound(judge(), None, F(0)))
        self.assertEqual(F(-1, 10), credibility_lower_bound(judge(), None, F(1), epsilon=F(1, 10)))

    def test_report(self) -> None:
        """The judge is not strongly robust; its bounds rise with credibility."""
        report = robustness_verdict(judge(), chi_grid=[F(1), F(0), F(1, 2), F(1, 2)])
        self.assertFalse(report.strongly_robust)
        self.assertEqual((F(0), F(1, 2), F(1)), report.chi_grid)
        self.assertEqual(F(-1), report.min_w)
        self.assertEqual(F(-1, 1000), report.limit)
        self.assertEqual(list(report.lower_bounds), sorted(report.lower_bounds))
        self.assertEqual(report.lower_bounds[-1], report.limit)
        self.assertEqual((F(0), F(1, 2)), (report.chi1_interval.lo, report.chi1_interval.hi))

    def test_strongly_robust(self) -> None:
        """The quadratic game keeps its commitment payoff under adversarial selection."""
        self.assertTrue(robustness_verdict(quadratic()).strongly_robust)
        self.assertFalse(robustness_verdict(edge_tie()).strongly_robust)

    def test_chi_one(self) -> None:
        """Full credibility gives the commitment interval."""
        interval = chi_one_payoff_set(judge(), Belief.binary(F(3, 4)))
        self.assertEqual((F(-1, 2), F(1)), (interval.lo, interval.hi))

    def test_parameters(self) -> None:
        """Credibility levels lie in [0, 1]; slack is positive; the grid is nonempty."""
        with self.assertRaises(ParameterError):
            credibility_lower_bound(judge(), None, F(3, 2))
        with self.assertRaises(ParameterError):
            credibility_lower_bound(judge(), None, F(1, 2), epsilon=F(0))
        with self.assertRaises(ParameterError):
            robustness_verdict(judge(), chi_grid=[])
        with self.assertRaises(ParameterError):
            robustness_verdict(judge(), chi_grid=[F(-1, 10)])

    def test_state_dependent_sender(self) -> None:
        """Credibility analysis refuses senders whose payoff depends on the state."""
        game = GameSpec(
            states=(Label("s0"), Label("s1")),
            actions=(Label("a0"), Label("a1")),
            prior=Belief.binary(F(1, 2)),
            u_sender=[[0, 1], [1, 0]],
            u_receiver=[[1, 0], [0, 1]],
        )
        with self.assertRaises(StateDependentSenderError):
            robustness_verdict(game)
        with self.assertRaises(StateDependentSenderError):
            credibility_lower_bound(game, None, F(1, 2))
