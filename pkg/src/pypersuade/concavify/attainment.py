"""Deciding whether the lower envelope is attained by an actual policy.

The closure value of a lower generator can exceed w at the generator's point
(on a cell boundary the receiver has extra best responses). The lower
envelope is attained iff some optimal policy only uses beliefs at which w
equals the closure value, which holds in particular for beliefs strictly
inside their cell.

The search works in perspective coordinates: for every sender region ``R`` a
sub-measure ``z_R = m_R * x_R`` with ``x_R`` in the region, a total mass
``m_R`` and a strictness slack ``s_R`` bounded by every cell inequality
against outside actions. Regions that cannot carry positive slack on the
optimal face are removed until either every remaining region is strictly
usable (attained) or nothing feasible remains (not attained).
"""

import logging
from collections.abc import Sequence
from fractions import Fraction

from pypersuade.game.constants import Relation
from pypersuade.game.errors import SoundnessError
from pypersuade.game.model import Belief, GameSpec, InformationPolicy, dot
from pypersuade.game.values import value_lower
from pypersuade.geometry.cells import tie_rows
from pypersuade.geometry.generators import SenderRegion
from pypersuade.geometry.lp import Constraint, LinearProgram, LpSolution, solve_lp

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


def optimal_face_regions(
    game: GameSpec, regions: Sequence[SenderRegion], duals: Sequence[Fraction]
) -> list[SenderRegion]:
    """Regions having a vertex with zero reduced cost against the generator-program duals.

    Args:
        game: The persuasion game.
        regions: Candidate sender regions.
        duals: One dual per state followed by the dual of ``sum(lambda) = 1``.

    Returns:
        The regions an optimal policy may put mass on.
    """
    *state_duals, total_dual = duals

    def reduced_cost(region: SenderRegion, vertex: Belief) -> Fraction:
        return (
            game.sender_payoff(region.action, vertex)
            - dot(state_duals, vertex.probs)
            - total_dual
        )

    return [r for r in regions if any(reduced_cost(r, v) == 0 for v in r.vertices)]


class _PerspectiveProgram:
    """Variable layout ``[z_R (n), m_R, s_R]`` per region."""

    def __init__(self, game: GameSpec, prior: Belief, lower_value: Fraction, regions: list[SenderRegion]):
        self.game = game
        self.regions = regions
        self.n = game.n_states
        self.width = self.n + 2
        size = self.width * len(regions)
        rows: list[Constraint] = []
        for theta in range(self.n):
            coefficients = [ZERO] * size
            for r in range(len(regions)):
                coefficients[self.z(r) + theta] = ONE
            rows.append(Constraint(tuple(coefficients), Relation.EQ, prior[theta]))
        value_row = [ZERO] * size
        for r, region in enumerate(regions):
            for theta in range(self.n):
                value_row[self.z(r) + theta] = game.u_sender[region.action][theta]
        rows.append(Constraint(tuple(value_row), Relation.EQ, lower_value))
        for r, region in enumerate(regions):
            rows.extend(self._region_rows(r, region, size))
        self.rows = tuple(rows)
        self.size = size

    def z(self, r: int) -> int:
        return r * self.width

    def m(self, r: int) -> int:
        return r * self.width + self.n

    def s(self, r: int) -> int:
        return r * self.width + self.n + 1

    def _embed(self, r: int, g: Sequence[Fraction], size: int, extra: dict[int, Fraction]) -> tuple[Fraction, ...]:
        row = [ZERO] * size
        for theta, coefficient in enumerate(g):
            row[self.z(r) + theta] = coefficient
        for index, coefficient in extra.items():
            row[index] = coefficient
        return tuple(row)

    def _region_rows(self, r: int, region: SenderRegion, size: int) -> list[Constraint]:
        equalities, outside = tie_rows(self.game, region.cell.tie_set)
        rows = [Constraint(self._embed(r, [ONE] * self.n, size, {self.m(r): -ONE}), Relation.EQ, ZERO)]
        for theta in range(self.n):
            if theta not in region.cell.mask:
                unit = [ONE if t == theta else ZERO for t in range(self.n)]
                rows.append(Constraint(self._embed(r, unit, size, {}), Relation.EQ, ZERO))
        rows.extend(Constraint(self._embed(r, e.coefficients, size, {}), Relation.EQ, ZERO) for e in equalities)
        rows.extend(Constraint(self._embed(r, g, size, {self.s(r): -ONE}), Relation.GE, ZERO) for g in outside)
        rows.extend(Constraint(self._embed(r, g, size, {}), Relation.GE, ZERO) for g in region.sender_rows)
        rows.append(Constraint(self._embed(r, [ZERO] * self.n, size, {self.s(r): ONE, self.m(r): -ONE}), Relation.LE, ZERO))
        return rows

    def solve(self, targets: set[int]) -> LpSolution:
        objective = [ZERO] * self.size
        for r in targets:
            objective[self.s(r)] = ONE
        upper: list[Fraction | None] = [None] * self.size
        for r in range(len(self.regions)):
            upper[self.s(r)] = ONE
        return solve_lp(LinearProgram(tuple(objective), self.rows, upper_bounds=tuple(upper)))


def exact_lower_policy(
    game: GameSpec,
    prior: Belief,
    lower_value: Fraction,
    regions: Sequence[SenderRegion],
) -> InformationPolicy | None:
    """Search for an optimal policy whose beliefs all attain their closure values.

    Args:
        game: The persuasion game.
        prior: Barycenter of the policy.
        lower_value: The lower envelope at ``prior``.
        regions: Sender regions that may carry mass on the optimal face.

    Returns:
        An exact optimal policy, or ``None`` when no policy attains ``lower_value``.

    Raises:
        SoundnessError: If a policy assembled from strictly interior regions fails verification.
    """
    allowed = list(regions)
    while allowed:
        program = _PerspectiveProgram(game, prior, lower_value, allowed)
        unknown = set(range(len(allowed)))
        strict: set[int] = set()
        solutions: list[tuple[Fraction, ...]] = []
        while unknown:
            solution = program.solve(unknown)
            if not solution.optimal or solution.point is None:
                return None
            positive = {r for r in unknown if solution.point[program.s(r)] > 0}
            if not positive:
                break
            solutions.append(solution.point)
            strict |= positive
            unknown -= positive
        if len(strict) == len(allowed):
            return _average_policy(game, program, solutions, lower_value)
        logger.debug("Dropping %d regions without strict support", len(allowed) - len(strict))
        allowed = [allowed[r] for r in sorted(strict)]
    return None


def _average_policy(
    game: GameSpec,
    program: _PerspectiveProgram,
    solutions: list[tuple[Fraction, ...]],
    lower_value: Fraction,
) -> InformationPolicy:
    k = len(solutions)
    average = [sum(column, ZERO) / k for column in zip(*solutions, strict=True)]
    pairs = []
    for r, region in enumerate(program.regions):
        mass = average[program.m(r)]
        if mass == 0:
            continue
        point = Belief(tuple(average[program.z(r) + t] / mass for t in range(program.n)))
        closure = game.sender_payoff(region.action, point)
        if value_lower(game, point) != closure:
            error_msg = f"belief {point} does not attain its closure value {closure}"
            logger.error(error_msg)
            raise SoundnessError(error_msg)
        pairs.append((point, mass))
    policy = InformationPolicy.from_weights(pairs)
    realized = sum((w * value_lower(game, b) for b, w in policy.support), ZERO)
    if realized != lower_value:
        error_msg = f"exact policy realizes {realized}, expected {lower_value}"
        logger.error(error_msg)
        raise SoundnessError(error_msg)
    return policy
