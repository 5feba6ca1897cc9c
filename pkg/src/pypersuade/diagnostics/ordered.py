"""Hypothesis checks for uniqueness in ordered environments.

An environment is ordered when states and actions sit on the real line,
receiver payoffs have strictly increasing differences, and at every belief
either the receiver's expected payoff is strictly quasiconcave in the action
or the sender's is weakly quasiconvex. The last clause quantifies over all
beliefs, so it is certified only through structural sufficient conditions;
otherwise a seeded sample of beliefs can refute it but never confirm it.
"""

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from more_itertools import pairwise, unique_everseen

from pypersuade.game.constants import ORDERED_SAMPLE_SIZE, OrderedStatus, QuasiCertificate, Relation
from pypersuade.game.errors import GameValidationError, ParameterError
from pypersuade.game.model import Belief, GameSpec, Label
from pypersuade.game.values import best_responses
from pypersuade.geometry.cells import Cell, enumerate_cells
from pypersuade.geometry.lp import Constraint, LinearProgram, solve_lp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderedReport:
    """Outcome of the ordered-model hypothesis checks.

    ``extreme_selection`` is the exact check that, at every belief, some
    sender-favorite best response is the lowest or the highest best response;
    it is the property the quasi-condition exists to guarantee.
    """

    is_ordered: OrderedStatus
    increasing_differences: bool
    quasi_condition: QuasiCertificate | None
    boundary_condition: bool
    theorem2_applies: bool
    extreme_selection: bool = False
    reason: str | None = None
    violating_belief: Belief | None = None

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if self.theorem2_applies and not (
            self.increasing_differences
            and self.boundary_condition
            and self.quasi_condition is not None
            and self.quasi_condition is not QuasiCertificate.FAILED
        ):
            raise ParameterError("theorem2_applies requires every ordered hypothesis")


def position(label: Label) -> Fraction:
    """Numeric position of a label."""
    if label.position is None:
        raise GameValidationError(f"label {label} has no position", "position")
    return label.position


def action_order(game: GameSpec) -> list[int]:
    """Action indices sorted by position."""
    return sorted(range(game.n_actions), key=lambda a: position(game.actions[a]))


def state_order(game: GameSpec) -> list[int]:
    """State indices sorted by position."""
    return sorted(range(game.n_states), key=lambda s: position(game.states[s]))


def has_increasing_differences(game: GameSpec) -> bool:
    """Whether ``u_R(a', t') - u_R(a, t') > u_R(a', t) - u_R(a, t)`` for all ``a < a'``, ``t < t'``."""
    u = game.u_receiver
    for low, high in combinations(action_order(game), 2):
        for t, t_prime in combinations(state_order(game), 2):
            if u[high][t_prime] - u[low][t_prime] <= u[high][t] - u[low][t]:
                logger.debug("Increasing differences fail at actions %s, states %s", (low, high), (t, t_prime))
                return False
    return True


def _slopes(game: GameSpec, values: Sequence[Fraction]) -> list[Fraction]:
    order = action_order(game)
    return [
        (values[b] - values[a]) / (position(game.actions[b]) - position(game.actions[a]))
        for a, b in pairwise(order)
    ]


def _columns(matrix: Sequence[Sequence[Fraction]], n_states: int) -> list[list[Fraction]]:
    return [[row[s] for row in matrix] for s in range(n_states)]


def _sender_monotone(game: GameSpec) -> bool:
    slopes = [_slopes(game, column) for column in _columns(game.u_sender, game.n_states)]
    return all(d >= 0 for column in slopes for d in column) or all(d <= 0 for column in slopes for d in column)


def _sender_convex(game: GameSpec) -> bool:
    return all(
        left <= right
        for column in _columns(game.u_sender, game.n_states)
        for left, right in pairwise(_slopes(game, column))
    )


def _receiver_concave(game: GameSpec) -> bool:
    return all(
        left > right
        for column in _columns(game.u_receiver, game.n_states)
        for left, right in pairwise(_slopes(game, column))
    )


def structural_certificate(game: GameSpec) -> QuasiCertificate | None:
    """First structural sufficient condition for the quasi-condition that holds, if any."""
    if game.n_actions == 2:
        return QuasiCertificate.BINARY_ACTIONS
    if _sender_monotone(game):
        return QuasiCertificate.SENDER_MONOTONE
    if _sender_convex(game):
        return QuasiCertificate.SENDER_CONVEX
    if _receiver_concave(game):
        return QuasiCertificate.RECEIVER_CONCAVE_CERTIFIED
    return None


def quasi_holds_at(game: GameSpec, belief: Belief) -> bool:
    """Whether the quasiconcavity/quasiconvexity clause holds at ``belief``."""
    order = action_order(game)
    receiver = [game.receiver_payoff(a, belief) for a in order]
    sender = [game.sender_payoff(a, belief) for a in order]
    triples = list(combinations(range(len(order)), 3))
    quasiconcave = all(receiver[m] > min(receiver[lo], receiver[hi]) for lo, m, hi in triples)
    quasiconvex = all(sender[m] <= max(sender[lo], sender[hi]) for lo, m, hi in triples)
    return quasiconcave or quasiconvex


def random_belief(rng: random.Random, n_states: int, scale: int = 1000) -> Belief:
    """Seeded random rational belief with denominators dividing the weight total."""
    weights = [rng.randint(0, scale) for _ in range(n_states)]
    if not any(weights):
        weights[rng.randrange(n_states)] = 1
    total = sum(weights)
    return Belief(tuple(Fraction(w, total) for w in weights))


def sample_quasi_condition(
    game: GameSpec, cells: Sequence[Cell], seed: int = 0, samples: int = ORDERED_SAMPLE_SIZE
) -> Belief | None:
    """Search cell vertices, cell witnesses and random beliefs for a quasi-condition violation.

    Returns:
        The first violating belief, or None when every sample satisfies the clause.
    """
    rng = random.Random(seed)  # noqa: S311
    candidates = [
        *(v for cell in cells for v in cell.vertices),
        *(cell.interior_witness for cell in cells),
        *(random_belief(rng, game.n_states) for _ in range(samples)),
    ]
    for belief in unique_everseen(candidates):
        if not quasi_holds_at(game, belief):
            return belief
    return None


def _extreme_gap(game: GameSpec, cell: Cell, action: int, lowest: int, highest: int) -> Fraction:
    """Largest ``min`` advantage of ``action`` over both extreme tied actions on the closed cell."""
    n = game.n_states
    u = game.u_sender
    rows = [
        Constraint((*row.coefficients, Fraction(0)), row.relation, row.rhs)
        for row in cell.region.constraints
    ]
    for extreme in (lowest, highest):
        gap = tuple(x - y for x, y in zip(u[action], u[extreme], strict=True))
        rows.append(Constraint((*gap, Fraction(-1)), Relation.GE, Fraction(0)))
    solution = solve_lp(
        LinearProgram(
            objective=(*([Fraction(0)] * n), Fraction(1)),
            constraints=tuple(rows),
            lower_bounds=(*([Fraction(0)] * n), None),
        )
    )
    if solution.value is None:
        error_msg = f"extreme selection program is {solution.status.value} on {cell}"
        logger.error(error_msg)
        raise RuntimeError(error_msg)
    return solution.value


def extreme_selection_holds(game: GameSpec, cells: Sequence[Cell] | None = None) -> bool:
    """Whether every belief has a sender-favorite best response at an end of its tie set.

    On a cell every tied action's sender payoff is linear, so an interior
    action beats both ends somewhere on the cell iff it does so on the
    closed cell, which one LP per action decides.
    """
    cells = enumerate_cells(game) if cells is None else cells
    rank = {a: k for k, a in enumerate(action_order(game))}
    for cell in cells:
        tied = sorted(cell.tie_set, key=rank.__getitem__)
        lowest, highest = tied[0], tied[-1]
        for action in tied[1:-1]:
            if _extreme_gap(game, cell, action, lowest, highest) > 0:
                logger.debug("Interior action %s is strictly preferred on %s", game.actions[action], cell)
                return False
    return True


def boundary_condition_holds(game: GameSpec, prior: Belief) -> bool:
    """Whether each extreme state of ``supp(prior)`` has zero mass or a unique best response."""
    support = [s for s in state_order(game) if s in prior.support]
    for extreme in {support[0], support[-1]}:
        if prior[extreme] != 0 and len(best_responses(game, Belief.point_mass(game.n_states, extreme))) != 1:
            return False
    return True


def ordered_check(
    game: GameSpec, prior: Belief | None = None, seed: int = 0, samples: int = ORDERED_SAMPLE_SIZE
) -> OrderedReport:
    """Check the hypotheses of the ordered-model uniqueness theorem.

    Args:
        game: The persuasion game; states and actions need positions.
        prior: The prior; the game's prior when omitted.
        seed: Seed of the sampling fallback.
        samples: Number of random beliefs in the sampling fallback.

    Returns:
        The report. Without positions the game is reported uncertified.
    """
    prior = game.prior if prior is None else prior
    game.check_belief(prior)
    if not game.has_positions:
        logger.info("Ordered check skipped: states and actions need numeric positions")
        return OrderedReport(
            is_ordered=OrderedStatus.UNCERTIFIED,
            increasing_differences=False,
            quasi_condition=None,
            boundary_condition=False,
            theorem2_applies=False,
            reason="states and actions need numeric positions",
        )
    cells = enumerate_cells(game)
    increasing = has_increasing_differences(game)
    boundary = boundary_condition_holds(game, prior)
    extreme = extreme_selection_holds(game, cells)
    violating = None
    quasi = structural_certificate(game)
    if quasi is None:
        violating = sample_quasi_condition(game, cells, seed=seed, samples=samples)
        quasi = QuasiCertificate.FAILED if violating is not None else QuasiCertificate.SAMPLED_ONLY
        logger.warning("Quasi-condition not certified; sampling reports %s", quasi.value)

    if not increasing or quasi is QuasiCertificate.FAILED:
        status = OrderedStatus.NO
    elif quasi.certified:
        status = OrderedStatus.YES
    else:
        status = OrderedStatus.UNCERTIFIED
    applies = (
        increasing and boundary and quasi is not QuasiCertificate.FAILED and (quasi.certified or extreme)
    )
    reason = None
    if not increasing:
        reason = "receiver payoffs lack strictly increasing differences"
    elif quasi is QuasiCertificate.FAILED:
        reason = f"quasi-condition fails at {violating}"
    elif not boundary:
        reason = "an extreme state of the prior's support has tied best responses"
    return OrderedReport(
        is_ordered=status,
        increasing_differences=increasing,
        quasi_condition=quasi,
        boundary_condition=boundary,
        theorem2_applies=applies,
        extreme_selection=extreme,
        reason=reason,
        violating_belief=violating,
    )
