"""Enumerations and tunable defaults shared across the package."""

import logging
from enum import Enum
from fractions import Fraction

logger = logging.getLogger(__name__)

#: Largest state space accepted by cell and vertex enumeration.
MAX_STATES = 5
#: Largest action set accepted by cell enumeration (tie sets range over its powerset).
MAX_ACTIONS = 12
#: Largest number of grid points the oracle will enumerate.
GRID_POINT_LIMIT = 2_000_000
#: Fraction of the way a boundary generator is pulled toward its cell's interior witness.
DEFAULT_PULL = Fraction(1, 1024)
#: Slack subtracted from the lower envelope in credibility bounds.
DEFAULT_EPSILON = Fraction(1, 1000)
#: Credibility levels evaluated when no grid is supplied.
DEFAULT_CHI_GRID = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(99, 100),
    Fraction(1),
)
#: Significant digits of the display-only decimal approximations.
DECIMAL_DIGITS = 20
#: Largest decimal exponent accepted in game documents, in either direction.
MAX_DECIMAL_EXPONENT = 64
#: Random beliefs sampled by the ordered-model fallback.
ORDERED_SAMPLE_SIZE = 64
#: Columns added per pricing round of the grid oracle.
ORACLE_COLUMN_BATCH = 32


class TieBreak(Enum):
    """
    How the receiver breaks indifference between best responses.

    Attributes:
        FAVORABLE: Sender-preferred best response (value function v).
        ADVERSARIAL: Sender-worst best response (value function w).
        MIXED: Favorable with probability zeta, adversarial otherwise.
    """

    FAVORABLE = "favorable"
    ADVERSARIAL = "adversarial"
    MIXED = "mixed"


class LpStatus(Enum):
    """Outcome of a linear program solve."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class Relation(Enum):
    """Relation of a constraint row to its right-hand side."""

    LE = "<="
    EQ = "="
    GE = ">="


class Sense(Enum):
    """Optimization direction."""

    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class GeneratorKind(Enum):
    """
    Which value function a generator feeds.

    Attributes:
        UPPER: Favorable tie-breaking, concavified into v-hat.
        LOWER: Adversarial tie-breaking, concavified into w-hat.
    """

    UPPER = "upper"
    LOWER = "lower"


class Verdict(Enum):
    """Aggregated answer to the payoff uniqueness question."""

    UNIQUE = "unique"
    NON_UNIQUE = "non_unique"
    INCONCLUSIVE = "inconclusive"


class WinningTest(Enum):
    """
    Which test of the uniqueness battery settled the verdict.

    Attributes:
        NONE: No sufficient test passed.
        NO_TIES: No relevant receiver ties anywhere on the simplex.
        PUBR_THEOREM: PUBR holds on a persuasion-sufficient set.
        GLOBAL: The lower envelope dominates v everywhere.
        ORDERED: The ordered-model hypotheses hold.
        INTERVAL_WIDTH_ZERO: Only the exact interval showed uniqueness.
    """

    NONE = "none"
    NO_TIES = "no_ties"
    PUBR_THEOREM = "pubr_theorem"
    GLOBAL = "global"
    ORDERED = "ordered"
    INTERVAL_WIDTH_ZERO = "interval_width_zero"


class QuasiCertificate(Enum):
    """
    Evidence for the per-belief quasiconcavity/quasiconvexity clause of ordered models.

    Attributes:
        BINARY_ACTIONS: Two actions, the clause holds vacuously.
        SENDER_MONOTONE: Sender payoff weakly monotone in the action, same direction per state.
        SENDER_CONVEX: Sender payoff weakly convex in the action position for every state.
        RECEIVER_CONCAVE_CERTIFIED: Receiver payoff strictly concave in the action position.
        SAMPLED_ONLY: No certificate, but no sampled belief violated the clause.
        FAILED: Some belief violates the clause.
    """

    BINARY_ACTIONS = "binary_actions"
    SENDER_MONOTONE = "sender_monotone"
    SENDER_CONVEX = "sender_convex"
    RECEIVER_CONCAVE_CERTIFIED = "receiver_concave_certified"
    SAMPLED_ONLY = "sampled_only"
    FAILED = "failed"

    @property
    def certified(self) -> bool:
        """Whether this is a structural certificate rather than a sampling outcome."""
        return self not in (QuasiCertificate.SAMPLED_ONLY, QuasiCertificate.FAILED)


class OrderedStatus(Enum):
    """Whether a game is an ordered environment."""

    YES = "yes"
    NO = "no"
    UNCERTIFIED = "uncertified"
