"""Tests for game documents, beliefs, policies and the pointwise value functions."""

import json
import tempfile
import unittest
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from pypersuade.game.errors import BeliefError, GameValidationError, ParameterError, PolicyError
from pypersuade.game.loader import dump_game, dumps_game, load_game, load_game_file
from pypersuade.game.model import Belief, InformationPolicy, Label, ValueInterval, barycenter
from pypersuade.game.rationals import approximate, format_rational, parse_rational, rational_entry
from pypersuade.game.values import best_responses, value_interval, value_lower, value_upper
from tests.games import ACQUIT, BAD_PRIOR_PATH, DEATH, LIFE, guilty, judge


def _document(**overrides):
    document = {
        "states": ["innocent", "guilty"],
        "actions": ["death", "acquit", "life"],
        "prior": ["3/4", "1/4"],
        "u_sender": [["-1", "-1"], ["0", "0"], ["1", "1"]],
        "u_receiver": [["0", "1"], ["1", "0"], ["0", "1"]],
    }
    document.update(overrides)
    return document


class TestRationals(unittest.TestCase):
    """Parsing and formatting of exact rationals."""

    def test_parse_fraction_string(self) -> None:
        """Rational strings are reduced exactly."""
        self.assertEqual(Fraction(-1, 2), parse_rational("-3/6"))
        self.assertEqual(Fraction(7), parse_rational(" 7 "))

    def test_parse_decimal(self) -> None:
        """Decimals are converted without floating point error."""
        self.assertEqual(Fraction(1, 10), parse_rational(Decimal("0.1")))
        self.assertEqual(Fraction(1, 10), parse_rational("0.1"))

    def test_parse_errors(self) -> None:
        """Malformed numerals name the field."""
        with self.assertRaises(GameValidationError) as context:
            parse_rational("1/0", "prior[0]")
        self.assertEqual("prior[0]", context.exception.field)
        for bad in ("abc", "NaN", True, 1.5, None):
            with self.subTest(bad=bad), self.assertRaises(GameValidationError):
                parse_rational(bad)  # type: ignore[arg-type]

    def test_decimal_exponent_bound(self) -> None:
        """Decimals with huge exponents are rejected before they reach the engine."""
        self.assertEqual(Fraction(1500), parse_rational("1.5e3"))
        self.assertEqual(Fraction(1, 10**64), parse_rational("1e-64"))
        for bad in ("1e-3000000", "1e999999999", Decimal("1e-65"), Decimal("-2E+70")):
            with self.subTest(bad=bad), self.assertRaises(GameValidationError) as context:
                parse_rational(bad, "u_sender[0][0]")
            self.assertEqual("u_sender[0][0]", context.exception.field)
        text = json.dumps(_document()).replace('"-1", "-1"', '"-1", 1e-3000000', 1)
        with self.assertRaises(GameValidationError) as context:
            load_game(text)
        self.assertEqual("u_sender[0][1]", context.exception.field)

    def test_format(self) -> None:
        """Rationals always carry an explicit denominator."""
        self.assertEqual("3/1", format_rational(Fraction(3)))
        self.assertEqual("-1/2", format_rational(Fraction(-1, 2)))
        self.assertEqual("0.25", approximate(Fraction(1, 4)))
        self.assertEqual({"exact": "-1/2", "approx": "-0.5"}, rational_entry(Fraction(-1, 2)))


class TestLoader(unittest.TestCase):
    """Reading and validating game documents."""

    def test_judge(self) -> None:
        """The judge document loads with positions."""
        game = judge()
        self.assertEqual(["innocent", "guilty"], [s.name for s in game.states])
        self.assertEqual(Fraction(-1), game.actions[DEATH].position)
        self.assertEqual(guilty(Fraction(1, 4)), game.prior)
        self.assertTrue(game.has_positions)
        self.assertTrue(game.sender_state_independent)

    def test_unreadable_file(self) -> None:
        """Files that are missing or not UTF-8 are reported on the document field."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "latin.json"
            path.write_bytes(b"\xff\xfe")
            for target in (path, Path(directory) / "missing.json"):
                with self.subTest(path=target.name), self.assertRaises(GameValidationError) as context:
                    load_game_file(target)
                self.assertEqual("document", context.exception.field)

    def test_plain_labels(self) -> None:
        """String labels are accepted and carry no position."""
        game = load_game(_document())
        self.assertFalse(game.has_positions)
        self.assertEqual(Label("acquit"), game.actions[ACQUIT])

    def test_json_decimals_are_exact(self) -> None:
        """Decimal literals in JSON text become exact rationals."""
        text = json.dumps(_document(prior=[0.75, 0.25], u_sender=[[-1, -1], [0, 0], [1, 1]]))
        game = load_game(text)
        self.assertEqual((Fraction(3, 4), Fraction(1, 4)), game.prior.probs)

    def test_bad_prior(self) -> None:
        """A prior summing to 5/6 is rejected on the prior field."""
        with self.assertRaises(GameValidationError) as context:
            load_game_file(BAD_PRIOR_PATH)
        self.assertEqual("prior", context.exception.field)
        self.assertIn("5/6", str(context.exception))

    def test_validation_fields(self) -> None:
        """Each malformed document names the offending field."""
        cases = {
            "u_sender": _document(u_sender=[["0", "0"], ["1", "1"]]),
            "u_receiver": _document(u_receiver=[["0"], ["1"], ["0"]]),
            "states": _document(states=["same", "same"]),
            "actions": _document(
                actions=[{"label": "death", "position": "1"}, "acquit", {"label": "life", "position": "2"}]
            ),
            "prior": _document(prior=["1/2", "1/2", "0"]),
            "document": "[1, 2]",
        }
        for field, document in cases.items():
            with self.subTest(field=field), self.assertRaises(GameValidationError) as context:
                load_game(document)
            self.assertEqual(field, context.exception.field)

    def test_missing_key(self) -> None:
        """A missing key is reported by name."""
        document = _document()
        del document["u_receiver"]
        with self.assertRaises(GameValidationError) as context:
            load_game(document)
        self.assertEqual("u_receiver", context.exception.field)

    def test_invalid_json(self) -> None:
        """Unparseable text is a document error."""
        with self.assertRaises(GameValidationError) as context:
            load_game("{not json")
        self.assertEqual("document", context.exception.field)

    def test_duplicate_positions(self) -> None:
        """Positions must be distinct."""
        document = _document(
            states=[{"label": "innocent", "position": "0"}, {"label": "guilty", "position": "0"}]
        )
        with self.assertRaises(GameValidationError):
            load_game(document)

    def test_dump_round_trip(self) -> None:
        """Dumped documents load back to an identical game."""
        game = judge()
        self.assertEqual(game, load_game(dump_game(game)))
        self.assertEqual(game, load_game(dumps_game(game)))
        self.assertEqual("-1/1", dump_game(game)["actions"][DEATH]["position"])


class TestModel(unittest.TestCase):
    """Beliefs and information policies."""

    def test_belief_validation(self) -> None:
        """Beliefs must be probability vectors."""
        with self.assertRaises(BeliefError):
            Belief((Fraction(1, 2), Fraction(1, 3)))
        with self.assertRaises(BeliefError):
            Belief((Fraction(3, 2), Fraction(-1, 2)))
        with self.assertRaises(BeliefError):
            judge().check_belief(Belief.uniform(range(3), 3))

    def test_belief_helpers(self) -> None:
        """Point masses, uniform beliefs, supports and mixtures."""
        self.assertEqual(Belief((Fraction(0), Fraction(1))), Belief.point_mass(2, 1))
        self.assertEqual(frozenset({0, 2}), Belief.uniform([0, 2], 3).support)
        self.assertEqual(guilty(Fraction(1, 4)), guilty(0).mix(guilty(Fraction(1, 2)), Fraction(1, 2)))

    def test_policy_validation(self) -> None:
        """Weights must be positive and sum to one."""
        with self.assertRaises(PolicyError):
            InformationPolicy(((guilty(0), Fraction(1, 2)),))
        with self.assertRaises(PolicyError):
            InformationPolicy(((guilty(0), Fraction(3, 2)), (guilty(1), Fraction(-1, 2))))
        with self.assertRaises(PolicyError):
            InformationPolicy(())

    def test_policy_barycenter(self) -> None:
        """The barycenter is the weighted mean, and repeated beliefs merge."""
        policy = InformationPolicy.from_weights(
            [(guilty(0), Fraction(1, 4)), (guilty(Fraction(1, 2)), Fraction(1, 2)), (guilty(0), Fraction(1, 4))]
        )
        self.assertEqual(2, len(policy))
        self.assertEqual(guilty(Fraction(1, 4)), policy.barycenter)
        self.assertEqual(policy.barycenter, barycenter(policy.support))


class TestValues(unittest.TestCase):
    """Best responses and v, w, V on the judge game."""

    def setUp(self) -> None:
        """Load the judge game."""
        self.game = judge()

    def test_best_responses(self) -> None:
        """Acquittal below 1/2, a three-way tie at 1/2, convictions above."""
        self.assertEqual(frozenset({ACQUIT}), best_responses(self.game, guilty(Fraction(1, 4))))
        self.assertEqual(frozenset({DEATH, ACQUIT, LIFE}), best_responses(self.game, guilty(Fraction(1, 2))))
        self.assertEqual(frozenset({DEATH, LIFE}), best_responses(self.game, guilty(Fraction(3, 4))))

    def test_values(self) -> None:
        """Favorable and adversarial values at the tie."""
        half = guilty(Fraction(1, 2))
        self.assertEqual(Fraction(1), value_upper(self.game, half))
        self.assertEqual(Fraction(-1), value_lower(self.game, half))
        interval = value_interval(self.game, half)
        self.assertEqual((Fraction(-1), Fraction(1)), (interval.lo, interval.hi))
        self.assertEqual(Fraction(2), interval.width)
        with self.assertRaises(ParameterError):
            ValueInterval(Fraction(1), Fraction(0))

    def test_values_without_ties(self) -> None:
        """Away from ties v and w coincide."""
        belief = guilty(Fraction(1, 4))
        self.assertEqual(value_upper(self.game, belief), value_lower(self.game, belief))
        self.assertEqual(Fraction(0), value_upper(self.game, belief))
