"""Aggregated uniqueness verdict.

The sufficient tests run cheapest first and stop at the first success. The
exact payoff interval is computed afterwards in every default run, and a
sufficient test that contradicts it raises :class:`SoundnessError`.
"""

import logging
from dataclasses import dataclass, replace

from pypersuade.concavify.envelope import PayoffInterval, equilibrium_interval
from pypersuade.diagnostics.ordered import OrderedReport, ordered_check
from pypersuade.diagnostics.pubr import Theorem1Result, theorem1_verdict
from pypersuade.diagnostics.ties import global_uniqueness, no_relevant_ties
from pypersuade.game.constants import Verdict, WinningTest
from pypersuade.game.errors import ParameterError, SoundnessError
from pypersuade.game.model import Belief, GameSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Evidence:
    """What each test of the battery found; ``None`` marks a test that did not run."""

    prior: Belief
    no_ties: bool | None = None
    theorem1: Theorem1Result | None = None
    ordered: OrderedReport | None = None
    global_unique: bool | None = None


@dataclass(frozen=True)
class UniquenessVerdict:
    """Whether the sender's equilibrium payoff is unique, and why."""

    verdict: Verdict
    winning_test: WinningTest
    evidence: Evidence
    interval: PayoffInterval | None

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if self.verdict is Verdict.NON_UNIQUE and (self.interval is None or self.interval.width <= 0):
            raise ParameterError("a non-unique verdict needs an interval of positive width")
        if self.verdict is Verdict.UNIQUE and self.winning_test is WinningTest.NONE:
            raise ParameterError("a unique verdict needs a winning test")
        if self.verdict is not Verdict.UNIQUE and self.winning_test is not WinningTest.NONE:
            raise ParameterError(f"winning test {self.winning_test.value} without a unique verdict")


def _battery(game: GameSpec, prior: Belief, jobs: int) -> tuple[WinningTest, Evidence]:
    evidence = Evidence(prior=prior, no_ties=no_relevant_ties(game))
    if evidence.no_ties:
        return WinningTest.NO_TIES, evidence

    theorem1 = theorem1_verdict(game, prior)
    evidence = replace(evidence, theorem1=theorem1)
    if theorem1.applies:
        return WinningTest.PUBR_THEOREM, evidence

    ordered = ordered_check(game, prior)
    evidence = replace(evidence, ordered=ordered)
    if ordered.theorem2_applies:
        return WinningTest.ORDERED, evidence

    global_unique = global_uniqueness(game, jobs=jobs)
    evidence = replace(evidence, global_unique=global_unique)
    if global_unique:
        return WinningTest.GLOBAL, evidence
    return WinningTest.NONE, evidence


def analyze(
    game: GameSpec, prior: Belief | None = None, jobs: int = 1, exact_interval: bool = True
) -> UniquenessVerdict:
    """Run the uniqueness battery and settle the verdict with the exact interval.

    Args:
        game: The persuasion game.
        prior: The prior; the game's prior when omitted.
        jobs: Worker processes for the global test.
        exact_interval: Compute the exact interval. Without it a run in which
            no sufficient test passes is inconclusive.

    Returns:
        The verdict with the evidence gathered.

    Raises:
        SoundnessError: If a sufficient test passed while the interval has positive width.
    """
    prior = game.prior if prior is None else prior
    game.check_belief(prior)
    winner, evidence = _battery(game, prior, jobs)
    interval = equilibrium_interval(game, prior) if exact_interval else None

    if winner is not WinningTest.NONE:
        if interval is not None and not interval.unique:
            error_msg = f"{winner.value} reported uniqueness but the payoff interval is {interval}"
            logger.error(error_msg)
            raise SoundnessError(error_msg)
        verdict = Verdict.UNIQUE
    elif interval is None:
        verdict = Verdict.INCONCLUSIVE
    elif interval.unique:
        verdict, winner = Verdict.UNIQUE, WinningTest.INTERVAL_WIDTH_ZERO
    else:
        verdict = Verdict.NON_UNIQUE
    logger.info("Verdict at %s: %s (%s)", prior, verdict.value, winner.value)
    return UniquenessVerdict(verdict=verdict, winning_test=winner, evidence=evidence, interval=interval)
