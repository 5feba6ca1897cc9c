"""Seeded random games for statistical and cross-method checks."""

import logging
import random
from fractions import Fraction
from typing import Literal

from pypersuade.game.constants import MAX_ACTIONS, MAX_STATES
from pypersuade.game.errors import DeskScaleError, ParameterError
from pypersuade.game.model import Belief, GameSpec, Label

logger = logging.getLogger(__name__)

PERTURBATION_STEPS = 10**6


def _entry(rng: random.Random, denom: int) -> Fraction:
    """Uniform over ``{0, 1/denom, ..., denom}`` shifted down by ``denom / 2``."""
    return Fraction(rng.randint(0, denom * denom), denom) - Fraction(denom, 2)


def _matrix(rng: random.Random, rows: int, cols: int, denom: int) -> list[list[Fraction]]:
    return [[_entry(rng, denom) for _ in range(cols)] for _ in range(rows)]


def random_game(
    seed: int,
    nstates: int,
    nactions: int,
    denom: int,
    *,
    prior: Literal["uniform", "random"] = "uniform",
    state_independent_sender: bool = False,
) -> GameSpec:
    """Draw a game with iid rational payoffs, reproducibly from ``seed``.

    Args:
        seed: Seed of the generator; equal seeds give equal games.
        nstates: Number of states.
        nactions: Number of actions.
        denom: Payoffs are multiples of ``1/denom`` in ``[-denom/2, denom/2]``.
        prior: ``"uniform"`` or a ``"random"`` full-support prior.
        state_independent_sender: Draw one sender payoff per action.

    Returns:
        The game, with states ``s0, s1, ...`` and actions ``a0, a1, ...``.

    Raises:
        ParameterError: If ``denom < 2`` or the prior kind is unknown.
        DeskScaleError: For sizes beyond the enumeration limits.
    """
    if denom < 2:
        raise ParameterError(f"denom must be at least 2, got {denom}")
    if not 2 <= nstates <= MAX_STATES or not 2 <= nactions <= MAX_ACTIONS:
        error_msg = (
            f"random games need 2..{MAX_STATES} states and 2..{MAX_ACTIONS} actions, "
            f"got {nstates} and {nactions}"
        )
        logger.error(error_msg)
        raise DeskScaleError(error_msg)
    rng = random.Random(seed)  # noqa: S311
    u_receiver = _matrix(rng, nactions, nstates, denom)
    if state_independent_sender:
        u_sender = [[value] * nstates for value in (_entry(rng, denom) for _ in range(nactions))]
    else:
        u_sender = _matrix(rng, nactions, nstates, denom)
    if prior == "uniform":
        belief = Belief.uniform(range(nstates), nstates)
    elif prior == "random":
        weights = [rng.randint(1, denom) for _ in range(nstates)]
        belief = Belief(tuple(Fraction(w, sum(weights)) for w in weights))
    else:
        raise ParameterError(f"unknown prior kind {prior!r}")
    return GameSpec(
        states=tuple(Label(f"s{i}") for i in range(nstates)),
        actions=tuple(Label(f"a{i}") for i in range(nactions)),
        prior=belief,
        u_sender=u_sender,
        u_receiver=u_receiver,
    )


def perturb_receiver(game: GameSpec, seed: int, magnitude: Fraction = Fraction(1, 10**6)) -> GameSpec:
    """Add iid uniform rationals from ``[-magnitude, magnitude]`` to every receiver payoff."""
    if magnitude <= 0:
        raise ParameterError(f"magnitude must be positive, got {magnitude}")
    rng = random.Random(seed)  # noqa: S311
    step = magnitude / PERTURBATION_STEPS
    return game.with_receiver(
        [
            [x + step * rng.randint(-PERTURBATION_STEPS, PERTURBATION_STEPS) for x in row]
            for row in game.u_receiver
        ]
    )
