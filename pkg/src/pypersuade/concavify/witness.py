"""Constructive equilibrium witnesses for any payoff in the equilibrium interval.

Shrinking the favorable optimal policy toward the prior by a factor ``lambda``
traces a path of policies ``p_lambda`` from no information (``lambda = 0``) to
the optimum (``lambda = 1``). Along the path the adversarial and favorable
values ``W(lambda) <= V(lambda)`` are piecewise linear with breaks only where
two receiver rows or two sender rows cross at some support belief, so an exact
scan over those breakpoints finds ``lambda`` with ``W <= s <= V``; mixing the
two tie-breaking rules with weight ``zeta`` then realizes ``s`` exactly.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from more_itertools import pairwise

from pypersuade.concavify.envelope import PayoffInterval, equilibrium_interval
from pypersuade.concavify.policy import TieBreakRule, evaluate_policy
from pypersuade.game.errors import PayoffOutOfRangeError, PolicyError
from pypersuade.game.model import Belief, GameSpec, InformationPolicy, Matrix, dot

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class EquilibriumWitness:
    """An equilibrium realizing sender payoff ``target``.

    The sender chooses ``policy`` and the receiver breaks ties favorably with
    probability ``zeta`` at every belief.
    """

    target: Fraction
    lam: Fraction
    policy: InformationPolicy
    zeta: Fraction
    realized_payoff: Fraction
    lower: Fraction = field(compare=False)
    upper: Fraction = field(compare=False)

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if not 0 <= self.lam <= 1:
            raise PolicyError(f"lambda must lie in [0, 1], got {self.lam}")
        if not 0 <= self.zeta <= 1:
            raise PolicyError(f"zeta must lie in [0, 1], got {self.zeta}")
        if self.realized_payoff != self.target:
            raise PolicyError(f"witness realizes {self.realized_payoff}, not {self.target}")


def shrunk_policy(optimal: InformationPolicy, prior: Belief, lam: Fraction) -> InformationPolicy:
    """``p_lambda``: every support belief moved to ``prior + lam * (belief - prior)``."""
    return InformationPolicy.from_weights((prior.mix(b, lam), w) for b, w in optimal.support)


def _crossings(matrix: Matrix, prior: Belief, belief: Belief) -> set[Fraction]:
    """Values of ``lambda`` in (0, 1) where two rows cross along the segment."""
    direction = [b - p for b, p in zip(belief.probs, prior.probs, strict=True)]
    roots = set()
    for first, second in combinations(matrix, 2):
        difference = [x - y for x, y in zip(first, second, strict=True)]
        slope = dot(difference, direction)
        if slope != 0:
            root = -dot(difference, prior.probs) / slope
            if 0 < root < 1:
                roots.add(root)
    return roots


def breakpoints(game: GameSpec, optimal: InformationPolicy, prior: Belief) -> list[Fraction]:
    """Sorted breakpoints of ``W`` and ``V`` along the path, including 0 and 1."""
    points = {ZERO, ONE}
    for belief in optimal.beliefs:
        points |= _crossings(game.u_receiver, prior, belief)
        points |= _crossings(game.u_sender, prior, belief)
    return sorted(points)


def _values(game: GameSpec, optimal: InformationPolicy, prior: Belief, lam: Fraction) -> tuple[Fraction, Fraction]:
    policy = shrunk_policy(optimal, prior, lam)
    return (
        evaluate_policy(game, policy, TieBreakRule.adversarial()),
        evaluate_policy(game, policy, TieBreakRule.favorable()),
    )


def _linear(at_a: Fraction, at_b: Fraction, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    """Intercept and slope of the line through ``(a, at_a)`` and ``(b, at_b)``."""
    slope = (at_b - at_a) / (b - a)
    return at_a - slope * a, slope


def _feasible_segment(
    game: GameSpec, optimal: InformationPolicy, prior: Belief, target: Fraction, left: Fraction, right: Fraction
) -> Fraction | None:
    """A ``lambda`` strictly between breakpoints with ``W <= target <= V``, if any."""
    first = left + (right - left) / 3
    second = left + 2 * (right - left) / 3
    w1, v1 = _values(game, optimal, prior, first)
    w2, v2 = _values(game, optimal, prior, second)
    lo, hi = left, right
    for (intercept, slope), sign in ((_linear(w1, w2, first, second), 1), (_linear(v1, v2, first, second), -1)):
        # W(lam) <= target for sign 1, V(lam) >= target for sign -1
        coefficient, bound = sign * slope, sign * (target - intercept)
        if coefficient > 0:
            hi = min(hi, bound / coefficient)
        elif coefficient < 0:
            lo = max(lo, bound / coefficient)
        elif bound < 0:
            return None
    if lo > hi or (lo == hi and lo in (left, right)):
        return None
    candidate = (lo + hi) / 2
    if not left < candidate < right:
        return None
    w, v = _values(game, optimal, prior, candidate)
    return candidate if w <= target <= v else None


def equilibrium_witness(
    game: GameSpec,
    prior: Belief | None,
    target: Fraction,
    interval: PayoffInterval | None = None,
) -> EquilibriumWitness:
    """Build an equilibrium whose sender payoff is exactly ``target``.

    Args:
        game: The persuasion game.
        prior: Prior belief; the game's own prior when ``None``.
        target: Desired sender payoff.
        interval: Precomputed equilibrium interval at ``prior``.

    Returns:
        The witness with the smallest scanned ``lambda``.

    Raises:
        PayoffOutOfRangeError: If ``target`` lies outside the equilibrium interval.
    """
    prior = game.prior if prior is None else prior
    interval = interval or equilibrium_interval(game, prior)
    target = Fraction(target)
    if not interval.lo <= target <= interval.hi:
        error_msg = f"target {target} outside the equilibrium payoffs [{interval.lo}, {interval.hi}]"
        logger.error(error_msg)
        raise PayoffOutOfRangeError(error_msg)
    optimal = interval.hi_witness
    points = breakpoints(game, optimal, prior)
    logger.debug("Scanning %d breakpoints for target %s", len(points), target)

    chosen: Fraction | None = None
    for left, right in pairwise(points):
        w, v = _values(game, optimal, prior, left)
        if w <= target <= v:
            chosen = left
            break
        chosen = _feasible_segment(game, optimal, prior, target, left, right)
        if chosen is not None:
            break
    if chosen is None:
        chosen = ONE
    w, v = _values(game, optimal, prior, chosen)
    if not w <= target <= v:
        error_msg = f"no lambda brackets target {target}; scan ended at W={w}, V={v}"
        logger.error(error_msg)
        raise PayoffOutOfRangeError(error_msg)
    zeta = ONE if v == w else (target - w) / (v - w)
    policy = shrunk_policy(optimal, prior, chosen)
    realized = evaluate_policy(game, policy, TieBreakRule.mixed(zeta))
    return EquilibriumWitness(
        target=target, lam=chosen, policy=policy, zeta=zeta, realized_payoff=realized, lower=w, upper=v
    )
