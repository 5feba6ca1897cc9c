"""Limited commitment: payoff bounds when the sender's report is only partly credible.

With credibility ``chi`` the sender's experiment is honored with probability
``chi`` and covertly replaceable otherwise. Only quantities certified for
finite games are computed here: the payoff set at ``chi = 1`` and a lower
bound on every equilibrium payoff at interior ``chi``.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from pypersuade.concavify.envelope import PayoffInterval, equilibrium_interval
from pypersuade.game.constants import DEFAULT_CHI_GRID, DEFAULT_EPSILON
from pypersuade.game.errors import ParameterError, StateDependentSenderError
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.rationals import parse_rational
from pypersuade.geometry.generators import minimum_lower_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CredibilityReport:
    """Credibility bounds on a grid of ``chi`` and the strong robustness verdict.

    ``limit`` is the bound as ``chi`` tends to one, ``w-hat(prior) - epsilon``.
    """

    chi_grid: tuple[Fraction, ...]
    lower_bounds: tuple[Fraction, ...]
    epsilon: Fraction
    chi1_interval: PayoffInterval = field(repr=False)
    strongly_robust: bool
    min_w: Fraction
    limit: Fraction

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if len(self.chi_grid) != len(self.lower_bounds):
            raise ParameterError("one lower bound per credibility level is required")
        if self.strongly_robust != self.chi1_interval.unique:
            raise ParameterError("strong robustness must coincide with a degenerate full-commitment interval")

    def rows(self) -> list[tuple[Fraction, Fraction]]:
        """``(chi, bound)`` pairs in grid order."""
        return list(zip(self.chi_grid, self.lower_bounds, strict=True))


def require_state_independent_sender(game: GameSpec) -> None:
    """Raise :class:`StateDependentSenderError` unless every sender row is constant."""
    if not game.sender_state_independent:
        error_msg = "credibility analysis needs a state-independent sender payoff (constant u_sender rows)"
        logger.error(error_msg)
        raise StateDependentSenderError(error_msg)


def _check_chi(chi: Fraction) -> Fraction:
    chi = parse_rational(chi, "chi")
    if not 0 <= chi <= 1:
        raise ParameterError(f"chi must lie in [0, 1], got {chi}")
    return chi


def _check_epsilon(epsilon: Fraction) -> Fraction:
    epsilon = parse_rational(epsilon, "epsilon")
    if epsilon <= 0:
        raise ParameterError(f"epsilon must be positive, got {epsilon}")
    return epsilon


def chi_one_payoff_set(game: GameSpec, prior: Belief | None = None) -> PayoffInterval:
    """Sender payoffs at full credibility, which coincide with the commitment interval."""
    require_state_independent_sender(game)
    return equilibrium_interval(game, prior)


def _bound(chi: Fraction, lower: Fraction, epsilon: Fraction, min_w: Fraction) -> Fraction:
    return chi * (lower - epsilon) + (1 - chi) * min_w


def credibility_lower_bound(
    game: GameSpec, prior: Belief | None, chi: Fraction, epsilon: Fraction = DEFAULT_EPSILON
) -> Fraction:
    """Certified lower bound on every sender equilibrium payoff at credibility ``chi``.

    The sender can commit to an ``epsilon``-optimal adversarial policy; when
    the report is overridden, the receiver still sees some belief, where the
    sender earns at least the minimum of w.

    Args:
        game: A game with state-independent sender payoff.
        prior: The prior; the game's prior when omitted.
        chi: Credibility level in ``[0, 1]``.
        epsilon: Positive slack of the committed policy.

    Returns:
        ``chi * (w-hat(prior) - epsilon) + (1 - chi) * min w``.

    Raises:
        ParameterError: For ``chi`` outside ``[0, 1]`` or ``epsilon <= 0``.
        StateDependentSenderError: If the sender payoff depends on the state.
    """
    chi = _check_chi(chi)
    epsilon = _check_epsilon(epsilon)
    interval = chi_one_payoff_set(game, prior)
    return _bound(chi, interval.lo, epsilon, minimum_lower_value(game))


def robustness_verdict(
    game: GameSpec,
    prior: Belief | None = None,
    chi_grid: Iterable[Fraction] = DEFAULT_CHI_GRID,
    epsilon: Fraction = DEFAULT_EPSILON,
) -> CredibilityReport:
    """Credibility bounds over ``chi_grid`` and whether commitment is strongly robust.

    Commitment is strongly robust when the full-commitment payoff survives
    adversarial equilibrium selection, i.e. ``w-hat(prior) = v-hat(prior)``.

    Raises:
        ParameterError: For a ``chi`` outside ``[0, 1]`` or ``epsilon <= 0``.
        StateDependentSenderError: If the sender payoff depends on the state.
    """
    grid = tuple(sorted({_check_chi(chi) for chi in chi_grid}))
    if not grid:
        raise ParameterError("the credibility grid must be nonempty")
    epsilon = _check_epsilon(epsilon)
    interval = chi_one_payoff_set(game, prior)
    min_w = minimum_lower_value(game)
    bounds = tuple(_bound(chi, interval.lo, epsilon, min_w) for chi in grid)
    report = CredibilityReport(
        chi_grid=grid,
        lower_bounds=bounds,
        epsilon=epsilon,
        chi1_interval=interval,
        strongly_robust=interval.unique,
        min_w=min_w,
        limit=interval.lo - epsilon,
    )
    logger.info("Credibility at %s: strongly robust = %s", interval.prior, report.strongly_robust)
    return report
