"""Information as selection on a finite set of beliefs."""

import logging
from collections.abc import Sequence

from pypersuade.concavify.envelope import cav_lower, check_persuasion_sufficient
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.values import value_upper

logger = logging.getLogger(__name__)


def information_selection_check(game: GameSpec, prior: Belief, beliefs: Sequence[Belief]) -> bool:
    """Whether ``beliefs`` certify a unique sender payoff at ``prior``.

    If policies on ``beliefs`` reach v-hat(prior) and, at each of those beliefs,
    further information can push the adversarial payoff up to the favorable
    one (``w-hat(mu) >= v(mu)``), the sender payoff is unique at ``prior``.

    Raises:
        PolicyError: If ``beliefs`` is empty.
    """
    if not check_persuasion_sufficient(game, prior, beliefs):
        logger.debug("Beliefs are not persuasion sufficient at %s", prior)
        return False
    for belief in beliefs:
        if cav_lower(game, belief).value < value_upper(game, belief):
            logger.debug("w-hat falls below v at %s", belief)
            return False
    return True
