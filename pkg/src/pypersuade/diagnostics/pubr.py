"""Potentially unique best responses and the PUBR property."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from pypersuade.concavify.envelope import cav_upper
from pypersuade.game.constants import Relation
from pypersuade.game.errors import ParameterError
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.values import best_responses
from pypersuade.geometry.lp import Constraint, LinearProgram, simplex_constraints, solve_lp

logger = logging.getLogger(__name__)


def margin_program(game: GameSpec, action: int, mask: frozenset[int], cap: Fraction | None = None) -> LinearProgram:
    """Program maximizing the margin ``t`` by which ``action`` beats every other action on ``Delta(mask)``."""
    n = game.n_states
    rows = [
        Constraint((*row.coefficients, Fraction(0)), row.relation, row.rhs)
        for row in simplex_constraints(n, mask)
    ]
    for other in range(game.n_actions):
        if other != action:
            difference = [x - y for x, y in zip(game.u_receiver[action], game.u_receiver[other], strict=True)]
            rows.append(Constraint((*difference, Fraction(-1)), Relation.GE, Fraction(0)))
    return LinearProgram(
        objective=(*([Fraction(0)] * n), Fraction(1)),
        constraints=tuple(rows),
        lower_bounds=(*([Fraction(0)] * n), None),
        upper_bounds=(*([None] * n), cap),
    )


def unique_best_response_margin(game: GameSpec, action: int, mask: frozenset[int]) -> Fraction:
    """Largest margin ``delta <= 1`` by which ``action`` beats every other action on ``Delta(mask)``."""
    solution = solve_lp(margin_program(game, action, mask, cap=Fraction(1)))
    return solution.value if solution.value is not None else Fraction(-1)


@lru_cache(maxsize=512)
def _potentially_unique(game: GameSpec, mask: frozenset[int]) -> frozenset[int]:
    return frozenset(a for a in range(game.n_actions) if unique_best_response_margin(game, a, mask) > 0)


def potentially_unique_actions(game: GameSpec, support_mask: Iterable[int] | None = None) -> frozenset[int]:
    """A^U: actions that are the unique best response at some belief on ``Delta(support_mask)``.

    Args:
        game: The persuasion game.
        support_mask: States allowed positive probability; the prior's support when omitted.

    Returns:
        The potentially unique actions.
    """
    mask = game.prior.support if support_mask is None else frozenset(support_mask)
    if not mask:
        raise ParameterError("support mask must be nonempty")
    return _potentially_unique(game, mask)


def pubr_at(game: GameSpec, belief: Belief, strong: bool = False, prior: Belief | None = None) -> bool:
    """Whether the favorable value at ``belief`` is reached by a potentially unique tied action.

    Args:
        game: The persuasion game.
        belief: Where the property is checked.
        strong: Use ``A^U(belief)``, i.e. the mask ``supp(belief)``, instead of ``supp(prior)``.
        prior: Prior defining ``A^U``; the game's prior when omitted.

    Returns:
        True iff ``max`` over best responses equals ``max`` over best responses in ``A^U``.
    """
    prior = game.prior if prior is None else prior
    mask = belief.support if strong else prior.support
    ties = best_responses(game, belief)
    candidates = ties & potentially_unique_actions(game, mask)
    if not candidates:
        return False
    best = max(game.sender_payoff(a, belief) for a in ties)
    return max(game.sender_payoff(a, belief) for a in candidates) == best


@dataclass(frozen=True)
class Theorem1Result:
    """Outcome of the PUBR theorem test on the support of the optimal policy."""

    applies: bool
    beliefs: tuple[Belief, ...]
    strong_applies: bool
    failing: tuple[Belief, ...] = field(default=())


def theorem1_verdict(game: GameSpec, prior: Belief | None = None) -> Theorem1Result:
    """Check PUBR on the support of a favorable optimal policy.

    The support of any optimal policy is persuasion sufficient, so PUBR there
    implies a unique sender payoff. Whether the strong variant also holds is
    recorded alongside.
    """
    prior = game.prior if prior is None else prior
    beliefs = tuple(cav_upper(game, prior).policy.beliefs)
    failing = tuple(b for b in beliefs if not pubr_at(game, b, prior=prior))
    strong = all(pubr_at(game, b, strong=True, prior=prior) for b in beliefs)
    logger.debug("PUBR fails at %d of %d support beliefs", len(failing), len(beliefs))
    return Theorem1Result(applies=not failing, beliefs=beliefs, strong_applies=strong, failing=failing)
