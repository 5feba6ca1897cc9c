"""Property-based tests over small random games.

Games have two or three states, two or three actions and small integer
payoffs, so ties and degenerate faces are common.
"""

import unittest
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from pypersuade.concavify.envelope import cav_upper, cav_upper_obedience, equilibrium_interval
from pypersuade.concavify.policy import TieBreakRule, evaluate_policy
from pypersuade.concavify.witness import equilibrium_witness
from pypersuade.diagnostics.genericity import genericity_check, phi
from pypersuade.diagnostics.pubr import potentially_unique_actions
from pypersuade.game.constants import GeneratorKind
from pypersuade.game.model import Belief, GameSpec, InformationPolicy, Label
from pypersuade.game.values import value_lower, value_upper
from pypersuade.geometry.caratheodory import is_affinely_independent, reduce_support
from pypersuade.oracle.grid import grid_cav

PROPERTY_SETTINGS = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])

_payoff = st.integers(min_value=-3, max_value=3)


@st.composite
def beliefs(draw, n_states: int, full_support: bool = False) -> Belief:
    """A rational belief with small denominators."""
    low = 1 if full_support else 0
    weights = draw(st.lists(st.integers(min_value=low, max_value=4), min_size=n_states, max_size=n_states))
    if not any(weights):
        weights[draw(st.integers(min_value=0, max_value=n_states - 1))] = 1
    total = sum(weights)
    return Belief(tuple(Fraction(w, total) for w in weights))


@st.composite
def games(draw, max_states: int = 3, max_actions: int = 3) -> GameSpec:
    """A small game with integer payoffs; the prior may sit on a face."""
    n = draw(st.integers(min_value=2, max_value=max_states))
    k = draw(st.integers(min_value=2, max_value=max_actions))
    matrix = st.lists(st.lists(_payoff, min_size=n, max_size=n), min_size=k, max_size=k)
    return GameSpec(
        states=tuple(Label(f"s{i}") for i in range(n)),
        actions=tuple(Label(f"a{i}") for i in range(k)),
        prior=draw(beliefs(n)),
        u_sender=draw(matrix),
        u_receiver=draw(matrix),
    )


class TestEnvelopeProperties(unittest.TestCase):
    """Invariants of the exact envelopes."""

    @PROPERTY_SETTINGS
    @given(games())
    def test_obedience_agrees(self, game: GameSpec) -> None:
        """Generator and obedience programs give the same v-hat."""
        self.assertEqual(cav_upper(game).value, cav_upper_obedience(game))

    @PROPERTY_SETTINGS
    @given(games())
    def test_interval_bounds(self, game: GameSpec) -> None:
        """w(prior) <= w-hat <= v-hat and v(prior) <= v-hat."""
        interval = equilibrium_interval(game)
        self.assertLessEqual(value_lower(game, game.prior), interval.lo)
        self.assertLessEqual(interval.lo, interval.hi)
        self.assertLessEqual(value_upper(game, game.prior), interval.hi)

    @PROPERTY_SETTINGS
    @given(games())
    def test_witness_policies(self, game: GameSpec) -> None:
        """Both witnesses are Bayes plausible, small, and realize their ends."""
        interval = equilibrium_interval(game)
        upper = interval.hi_witness
        self.assertEqual(game.prior, upper.barycenter)
        self.assertLessEqual(len(upper), game.n_states)
        self.assertEqual(interval.hi, evaluate_policy(game, upper, TieBreakRule.favorable()))
        lower = interval.lo_witness
        self.assertEqual(game.prior, lower.barycenter)
        realized = evaluate_policy(game, lower, TieBreakRule.adversarial())
        if interval.lo_attained:
            self.assertEqual(interval.lo, realized)
        else:
            self.assertGreater(interval.epsilon, 0)
            self.assertEqual(interval.lo - interval.epsilon, realized)

    @PROPERTY_SETTINGS
    @given(games(), st.fractions(min_value=0, max_value=1))
    def test_every_payoff_has_a_witness(self, game: GameSpec, t: Fraction) -> None:
        """Every payoff of the interval is realized exactly."""
        interval = equilibrium_interval(game)
        target = interval.lo + t * interval.width
        witness = equilibrium_witness(game, None, target, interval=interval)
        self.assertEqual(target, evaluate_policy(game, witness.policy, TieBreakRule.mixed(witness.zeta)))
        self.assertEqual(game.prior, witness.policy.barycenter)

    @PROPERTY_SETTINGS
    @given(games(max_states=2))
    def test_grid_is_a_lower_bound(self, game: GameSpec) -> None:
        """Grid envelopes never exceed the exact ones."""
        interval = equilibrium_interval(game)
        self.assertLessEqual(grid_cav(game, None, 6, GeneratorKind.UPPER).value, interval.hi)
        self.assertLessEqual(grid_cav(game, None, 6, GeneratorKind.LOWER).value, interval.lo)


class TestDiagnosticProperties(unittest.TestCase):
    """Invariants of the uniqueness diagnostics."""

    @PROPERTY_SETTINGS
    @given(games())
    def test_potentially_unique_monotone_in_mask(self, game: GameSpec) -> None:
        """Larger faces have at least as many potentially unique actions."""
        full = potentially_unique_actions(game, game.full_mask)
        for state in range(game.n_states):
            with self.subTest(state=state):
                self.assertLessEqual(potentially_unique_actions(game, {state}), full)

    @PROPERTY_SETTINGS
    @given(games(max_states=2), st.integers(min_value=1, max_value=5))
    def test_scale_invariance(self, game: GameSpec, factor: int) -> None:
        """Scaling receiver payoffs keeps every sign of phi."""
        scaled = game.with_receiver([[factor * x for x in row] for row in game.u_receiver])
        report = genericity_check(game)
        self.assertEqual(report.in_u_r, genericity_check(scaled).in_u_r)
        for index, value in report.phi_values.items():
            self.assertEqual(factor * value, phi(scaled, index))


class TestSupportReductionProperties(unittest.TestCase):
    """Caratheodory reduction of random policies."""

    @PROPERTY_SETTINGS
    @given(
        st.lists(beliefs(3), min_size=1, max_size=8, unique=True),
        st.data(),
    )
    def test_reduction(self, points: list[Belief], data: st.DataObject) -> None:
        """The barycenter is kept and the value never drops."""
        weights = data.draw(st.lists(st.integers(1, 5), min_size=len(points), max_size=len(points)))
        values = data.draw(st.lists(st.fractions(-3, 3), min_size=len(points), max_size=len(points)))
        total = sum(weights)
        policy = InformationPolicy.from_weights(
            (p, Fraction(w, total)) for p, w in zip(points, weights, strict=True)
        )
        value = dict(zip(points, values, strict=True))
        reduced = reduce_support(policy, [value[b] for b in policy.beliefs])
        self.assertEqual(policy.barycenter, reduced.barycenter)
        self.assertLessEqual(len(reduced), 3)
        self.assertTrue(is_affinely_independent(reduced.beliefs))
        before = sum(w * value[b] for b, w in policy.support)
        self.assertGreaterEqual(sum(w * value[b] for b, w in reduced.support), before)
