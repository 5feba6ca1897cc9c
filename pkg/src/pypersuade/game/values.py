"""Best responses and the pointwise value functions v, w and V = [w, v]."""

import logging
from fractions import Fraction

from pypersuade.game.model import Belief, GameSpec, ValueInterval

logger = logging.getLogger(__name__)


def best_responses(game: GameSpec, belief: Belief) -> frozenset[int]:
    """Receiver's exact argmax set at ``belief``.

    Args:
        game: The persuasion game.
        belief: Receiver's posterior.

    Returns:
        Indices of all actions maximizing expected receiver payoff.
    """
    game.check_belief(belief)
    payoffs = [game.receiver_payoff(a, belief) for a in range(game.n_actions)]
    best = max(payoffs)
    return frozenset(a for a, p in enumerate(payoffs) if p == best)


def value_upper(game: GameSpec, belief: Belief) -> Fraction:
    """v(mu): sender payoff when ties are broken in the sender's favor."""
    return max(game.sender_payoff(a, belief) for a in best_responses(game, belief))


def value_lower(game: GameSpec, belief: Belief) -> Fraction:
    """w(mu): sender payoff when ties are broken against the sender."""
    return min(game.sender_payoff(a, belief) for a in best_responses(game, belief))


def value_interval(game: GameSpec, belief: Belief) -> ValueInterval:
    """V(mu) = [w(mu), v(mu)]."""
    payoffs = [game.sender_payoff(a, belief) for a in best_responses(game, belief)]
    return ValueInterval(lo=min(payoffs), hi=max(payoffs))
