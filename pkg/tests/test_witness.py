"""Tests for equilibrium witnesses."""

import unittest
from fractions import Fraction

from pypersuade.concavify.envelope import equilibrium_interval
from pypersuade.concavify.policy import TieBreakRule, evaluate_policy
from pypersuade.concavify.witness import breakpoints, equilibrium_witness, shrunk_policy
from pypersuade.game.errors import PayoffOutOfRangeError
from pypersuade.game.model import InformationPolicy
from tests.games import edge_tie, guilty, judge

F = Fraction


class TestWitness(unittest.TestCase):
    """Every payoff in the judge interval is realized by some equilibrium."""

    def setUp(self) -> None:
        """Judge game at its prior."""
        self.game = judge()

    def test_targets(self) -> None:
        """Lambda and zeta for several targets in [0, 1/2]."""
        expected = {
            F(0): (F(0), F(1)),
            F(1, 8): (F(1), F(5, 8)),
            F(1, 4): (F(1), F(3, 4)),
            F(1, 2): (F(1), F(1)),
        }
        for target, (lam, zeta) in expected.items():
            with self.subTest(target=target):
                witness = equilibrium_witness(self.game, None, target)
                self.assertEqual((lam, zeta), (witness.lam, witness.zeta))
                self.assertEqual(target, witness.realized_payoff)
                self.assertEqual(self.game.prior, witness.policy.barycenter)
                self.assertLessEqual(witness.lower, target)
                self.assertLessEqual(target, witness.upper)

    def test_realized_by_mixed_rule(self) -> None:
        """Re-evaluating the witness policy under its rule gives the target."""
        witness = equilibrium_witness(self.game, self.game.prior, F(1, 4))
        self.assertEqual(F(1, 4), evaluate_policy(self.game, witness.policy, TieBreakRule.mixed(witness.zeta)))

    def test_no_information_endpoint(self) -> None:
        """Target 0 is met without revealing anything."""
        witness = equilibrium_witness(self.game, None, F(0))
        self.assertEqual(InformationPolicy.degenerate(guilty(F(1, 4))), witness.policy)

    def test_out_of_range(self) -> None:
        """Targets outside the interval are rejected."""
        for target in (F(-1, 4), F(3, 4)):
            with self.subTest(target=target), self.assertRaises(PayoffOutOfRangeError):
                equilibrium_witness(self.game, None, target)

    def test_precomputed_interval(self) -> None:
        """A supplied interval is reused."""
        interval = equilibrium_interval(self.game)
        witness = equilibrium_witness(self.game, None, F(1, 2), interval=interval)
        self.assertEqual(interval.hi_witness, witness.policy)

    def test_edge_tie(self) -> None:
        """Full revelation with a fair coin at the tie realizes the midpoint."""
        witness = equilibrium_witness(edge_tie(), None, F(-3, 4))
        self.assertEqual((F(1), F(1, 2)), (witness.lam, witness.zeta))


class TestPath(unittest.TestCase):
    """The shrinking path toward the prior."""

    def test_shrunk_policy(self) -> None:
        """Halfway along the path each belief moves halfway to the prior."""
        optimal = InformationPolicy.from_weights([(guilty(0), F(1, 2)), (guilty(F(1, 2)), F(1, 2))])
        shrunk = shrunk_policy(optimal, guilty(F(1, 4)), F(1, 2))
        self.assertEqual([guilty(F(1, 8)), guilty(F(3, 8))], shrunk.beliefs)
        self.assertEqual(guilty(F(1, 4)), shrunk.barycenter)

    def test_breakpoints(self) -> None:
        """The judge path only changes behavior at its end."""
        game = judge()
        optimal = equilibrium_interval(game).hi_witness
        self.assertEqual([F(0), F(1)], breakpoints(game, optimal, game.prior))
