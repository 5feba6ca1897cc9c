"""Evaluation of information policies under a tie-breaking rule."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import cast

from typing_extensions import Self

from pypersuade.game.constants import TieBreak
from pypersuade.game.errors import PolicyError
from pypersuade.game.model import GameSpec, InformationPolicy
from pypersuade.game.values import value_interval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TieBreakRule:
    """A tie-breaking rule; ``zeta`` is the weight on the favorable choice for mixed rules.

    ``zeta`` is a scalar or one weight per support point of the evaluated policy.
    """

    kind: TieBreak
    zeta: Fraction | tuple[Fraction, ...] | None = None

    def __post_init__(self) -> None:
        """Check that mixing weights lie in [0, 1]."""
        if self.kind is not TieBreak.MIXED:
            return
        if self.zeta is None:
            raise PolicyError("a mixed rule needs zeta")
        weights = self.zeta if isinstance(self.zeta, tuple) else (self.zeta,)
        if any(not 0 <= z <= 1 for z in weights):
            raise PolicyError(f"zeta must lie in [0, 1], got {self.zeta}")

    @classmethod
    def favorable(cls) -> Self:
        """Ties broken for the sender."""
        return cls(TieBreak.FAVORABLE)

    @classmethod
    def adversarial(cls) -> Self:
        """Ties broken against the sender."""
        return cls(TieBreak.ADVERSARIAL)

    @classmethod
    def mixed(cls, zeta: Fraction | Sequence[Fraction]) -> Self:
        """Favorable with probability ``zeta``, adversarial otherwise."""
        if isinstance(zeta, Sequence):
            return cls(TieBreak.MIXED, tuple(Fraction(z) for z in zeta))
        return cls(TieBreak.MIXED, Fraction(zeta))


def evaluate_policy(game: GameSpec, policy: InformationPolicy, rule: TieBreakRule) -> Fraction:
    """Expected sender payoff of ``policy`` when the receiver follows ``rule``.

    Args:
        game: The persuasion game.
        policy: Distribution over posteriors.
        rule: How ties are broken at each posterior.

    Returns:
        ``sum(weight * payoff)`` with payoff v, w or ``(1 - zeta) w + zeta v``.

    Raises:
        PolicyError: If per-point weights do not match the support.
    """
    if isinstance(rule.zeta, tuple) and len(rule.zeta) != len(policy.support):
        raise PolicyError(f"{len(rule.zeta)} zeta weights for {len(policy.support)} support points")
    total = Fraction(0)
    for i, (belief, weight) in enumerate(policy.support):
        interval = value_interval(game, belief)
        if rule.kind is TieBreak.FAVORABLE:
            payoff = interval.hi
        elif rule.kind is TieBreak.ADVERSARIAL:
            payoff = interval.lo
        else:
            zeta = rule.zeta[i] if isinstance(rule.zeta, tuple) else cast(Fraction, rule.zeta)
            payoff = (1 - zeta) * interval.lo + zeta * interval.hi
        total += weight * payoff
    return total
