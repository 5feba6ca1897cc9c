"""Concave envelopes of v and w and the equilibrium payoff interval.

Both envelopes are linear programs over generators: maximize
``sum(lambda_g * value_g)`` subject to ``sum(lambda_g * point_g) = prior`` and
``sum(lambda_g) = 1``. Generators are built on the face of the simplex spanned
by the prior's support, since no Bayes-plausible policy leaves that face.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from pypersuade.concavify.attainment import exact_lower_policy, optimal_face_regions
from pypersuade.game.constants import DEFAULT_PULL, LpStatus, Relation
from pypersuade.game.errors import ParameterError, PolicyError
from pypersuade.game.model import Belief, GameSpec, InformationPolicy
from pypersuade.game.values import value_lower, value_upper
from pypersuade.geometry.caratheodory import reduce_support
from pypersuade.geometry.generators import Generator, sender_regions
from pypersuade.geometry.generators import lower_generators as _lower_generators
from pypersuade.geometry.generators import upper_generators as _upper_generators
from pypersuade.geometry.lp import Constraint, LinearProgram, solve_lp

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class UpperEnvelope(NamedTuple):
    """v-hat at a prior with an optimal policy."""

    value: Fraction
    policy: InformationPolicy


class LowerEnvelope(NamedTuple):
    """w-hat at a prior.

    ``policy`` is exactly optimal under adversarial tie-breaking when
    ``attained``; otherwise it falls short of ``value`` by exactly ``epsilon``.
    """

    value: Fraction
    policy: InformationPolicy
    attained: bool
    epsilon: Fraction


class RestrictedValue(NamedTuple):
    """Best favorable value using only beliefs from a finite set."""

    status: LpStatus
    value: Fraction | None
    policy: InformationPolicy | None


@dataclass(frozen=True)
class PayoffInterval:
    """The set of sender equilibrium payoffs ``[w-hat(prior), v-hat(prior)]``."""

    prior: Belief
    lo: Fraction
    hi: Fraction
    lo_attained: bool
    lo_witness: InformationPolicy = field(repr=False)
    hi_witness: InformationPolicy = field(repr=False)
    epsilon: Fraction = ZERO

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if self.lo > self.hi:
            raise ParameterError(f"empty payoff interval [{self.lo}, {self.hi}]")
        if self.epsilon < 0 or (self.lo_attained and self.epsilon != 0):
            raise ParameterError(f"inconsistent lower witness slack {self.epsilon}")

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"

    @property
    def width(self) -> Fraction:
        """``hi - lo``."""
        return self.hi - self.lo

    @property
    def unique(self) -> bool:
        """Whether the sender's equilibrium payoff is unique."""
        return self.lo == self.hi


def _columns(generators: Iterable[Generator]) -> list[Generator]:
    """One generator per point: the highest value, exact ones first among equals."""
    best: dict[Belief, Generator] = {}
    for g in generators:
        current = best.get(g.point)
        if current is None or (g.value, g.exact) > (current.value, current.exact):
            best[g.point] = g
    return [best[p] for p in sorted(best)]


def generator_program(points: Sequence[Belief], values: Sequence[Fraction], prior: Belief) -> LinearProgram:
    """Maximize the weighted value of ``points`` subject to their barycenter being ``prior``."""
    rows = [
        Constraint(tuple(p[theta] for p in points), Relation.EQ, prior[theta])
        for theta in range(len(prior))
    ]
    rows.append(Constraint(tuple(Fraction(1) for _ in points), Relation.EQ, Fraction(1)))
    return LinearProgram(objective=tuple(values), constraints=tuple(rows))


class GeneratorOptimum(NamedTuple):
    """Optimal generator weights with the dual prices of the barycenter rows."""

    value: Fraction
    weights: tuple[Fraction, ...]
    duals: tuple[Fraction, ...]


def solve_generators(points: Sequence[Belief], values: Sequence[Fraction], prior: Belief) -> GeneratorOptimum:
    """Solve :func:`generator_program`; duals come per state row, then for the weight row."""
    solution = solve_lp(generator_program(points, values, prior))
    if solution.value is None or solution.point is None or solution.certificate is None:
        # the prior is a convex combination of the simplex vertices, which are always generators
        error_msg = f"generator program is {solution.status.value} at prior {prior}"
        logger.error(error_msg)
        raise RuntimeError(error_msg)
    return GeneratorOptimum(solution.value, solution.point, solution.certificate)


def _policy(points: Sequence[Belief], weights: Sequence[Fraction]) -> InformationPolicy:
    return InformationPolicy.from_weights((p, w) for p, w in zip(points, weights, strict=True) if w > 0)


def _reduced(policy: InformationPolicy, values: dict[Belief, Fraction]) -> InformationPolicy:
    return reduce_support(policy, [values[b] for b in policy.beliefs])


def cav_upper(game: GameSpec, prior: Belief | None = None) -> UpperEnvelope:
    """v-hat(prior) with an optimal policy of at most ``|Theta|`` beliefs.

    Args:
        game: The persuasion game.
        prior: Prior belief; the game's own prior when omitted.

    Returns:
        The envelope value and a policy attaining it under favorable tie-breaking.
    """
    prior = game.prior if prior is None else prior
    game.check_belief(prior)
    columns = _columns(_upper_generators(game, prior.support))
    points = [g.point for g in columns]
    optimum = solve_generators(points, [g.value for g in columns], prior)
    policy = _policy(points, optimum.weights)
    policy = _reduced(policy, {b: value_upper(game, b) for b in policy.beliefs})
    logger.debug("v-hat(%s) = %s", prior, optimum.value)
    return UpperEnvelope(optimum.value, policy)


def cav_upper_obedience(game: GameSpec, prior: Belief | None = None) -> Fraction:
    """v-hat(prior) from the obedience (recommendation) program.

    Variables ``x[a, theta] >= 0`` are joint probabilities of recommending ``a``
    in ``theta``; each recommendation must be obeyed.
    """
    prior = game.prior if prior is None else prior
    game.check_belief(prior)
    n, k = game.n_states, game.n_actions

    def index(a: int, theta: int) -> int:
        return a * n + theta

    rows = []
    for theta in range(n):
        coefficients = [ZERO] * (n * k)
        for a in range(k):
            coefficients[index(a, theta)] = Fraction(1)
        rows.append(Constraint(tuple(coefficients), Relation.EQ, prior[theta]))
    for a in range(k):
        for other in range(k):
            if other == a:
                continue
            coefficients = [ZERO] * (n * k)
            for theta in range(n):
                coefficients[index(a, theta)] = game.u_receiver[a][theta] - game.u_receiver[other][theta]
            rows.append(Constraint(tuple(coefficients), Relation.GE, ZERO))
    objective = tuple(game.u_sender[a][theta] for a in range(k) for theta in range(n))
    solution = solve_lp(LinearProgram(objective, tuple(rows)))
    if solution.value is None:
        error_msg = f"obedience program is {solution.status.value} at prior {prior}"
        logger.error(error_msg)
        raise RuntimeError(error_msg)
    return solution.value


def cav_lower(game: GameSpec, prior: Belief | None = None, *, pull: Fraction = DEFAULT_PULL) -> LowerEnvelope:
    """w-hat(prior), whether it is attained, and a witness policy.

    Args:
        game: The persuasion game.
        prior: Prior belief; the game's own prior when omitted.
        pull: Step toward the cell interior used for non-attained witnesses.

    Returns:
        The envelope. When it is not attained, every boundary generator is
        pulled ``pull`` of the way toward its cell's interior witness and the
        exact shortfall of the resulting policy is reported as ``epsilon``.
    """
    prior = game.prior if prior is None else prior
    game.check_belief(prior)
    if not 0 < pull <= 1:
        raise ParameterError(f"pull must lie in (0, 1], got {pull}")
    mask = prior.support
    generators = _lower_generators(game, mask)
    columns = _columns(generators)
    points = [g.point for g in columns]
    optimum = solve_generators(points, [g.value for g in columns], prior)
    lower_value = optimum.value

    used = [g for g, weight in zip(columns, optimum.weights, strict=True) if weight > 0]
    policy: InformationPolicy | None
    if all(g.exact for g in used):
        policy = _policy(points, optimum.weights)
    else:
        regions = optimal_face_regions(game, sender_regions(game, mask), optimum.duals)
        policy = exact_lower_policy(game, prior, lower_value, regions)
    if policy is not None:
        policy = _reduced(policy, {b: value_lower(game, b) for b in policy.beliefs})
        logger.debug("w-hat(%s) = %s, attained", prior, lower_value)
        return LowerEnvelope(lower_value, policy, True, ZERO)

    exact = _columns(g for g in generators if g.exact)
    pulled = {}
    for g in generators:
        if not g.exact:
            point = g.point.mix(g.anchor, pull)
            pulled[point] = value_lower(game, point)
    candidates = {g.point: g.value for g in exact}
    for point, value in pulled.items():
        if point not in candidates or value > candidates[point]:
            candidates[point] = value
    points = sorted(candidates)
    fallback = solve_generators(points, [candidates[p] for p in points], prior)
    policy = _reduced(_policy(points, fallback.weights), candidates)
    epsilon = lower_value - fallback.value
    logger.info("w-hat(%s) = %s is not attained; witness falls short by %s", prior, lower_value, epsilon)
    return LowerEnvelope(lower_value, policy, False, epsilon)


def equilibrium_interval(game: GameSpec, prior: Belief | None = None) -> PayoffInterval:
    """The set of sender equilibrium payoffs at ``prior`` with witnesses for both ends."""
    prior = game.prior if prior is None else prior
    upper = cav_upper(game, prior)
    lower = cav_lower(game, prior)
    interval = PayoffInterval(
        prior=prior,
        lo=lower.value,
        hi=upper.value,
        lo_attained=lower.attained,
        lo_witness=lower.policy,
        hi_witness=upper.policy,
        epsilon=lower.epsilon,
    )
    logger.info("Equilibrium payoffs at %s: %s", prior, interval)
    return interval


def cav_restricted(game: GameSpec, prior: Belief, beliefs: Sequence[Belief]) -> RestrictedValue:
    """Best favorable value of policies supported on ``beliefs``.

    Returns:
        Status ``infeasible`` when ``prior`` is outside the convex hull of ``beliefs``.

    Raises:
        PolicyError: If ``beliefs`` is empty.
    """
    if not beliefs:
        raise PolicyError("the restricted belief set must be nonempty")
    game.check_belief(prior)
    for belief in beliefs:
        game.check_belief(belief)
    points = sorted(set(beliefs))
    solution = solve_lp(generator_program(points, [value_upper(game, p) for p in points], prior))
    if not solution.optimal or solution.point is None:
        return RestrictedValue(solution.status, None, None)
    return RestrictedValue(solution.status, solution.value, _policy(points, solution.point))


def check_persuasion_sufficient(game: GameSpec, prior: Belief, beliefs: Sequence[Belief]) -> bool:
    """Whether policies supported on ``beliefs`` reach v-hat(prior) exactly."""
    restricted = cav_restricted(game, prior, beliefs)
    return restricted.value is not None and restricted.value == cav_upper(game, prior).value
