"""Decomposition of the belief simplex into cells of constant best-response tie set."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from more_itertools import powerset

from pypersuade.game.constants import MAX_ACTIONS, MAX_STATES, Relation
from pypersuade.game.errors import DeskScaleError, ParameterError
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.values import best_responses
from pypersuade.geometry.linalg import rank
from pypersuade.geometry.lp import Constraint, LinearProgram, simplex_constraints, solve_lp
from pypersuade.geometry.vertices import cell_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cell:
    """Closed polytope of beliefs whose relative interior has best-response set ``tie_set``.

    ``region`` describes the closed cell as a feasibility program over belief
    coordinates; ``interior_witness`` is the centroid of the vertices, which
    lies in the relative interior.
    """

    tie_set: frozenset[int]
    vertices: tuple[Belief, ...]
    interior_witness: Belief
    mask: frozenset[int]
    region: LinearProgram = field(compare=False, repr=False)

    def __str__(self) -> str:
        return f"Cell({sorted(self.tie_set)}, {len(self.vertices)} vertices)"

    @property
    def dimension(self) -> int:
        """Affine dimension of the cell."""
        base = self.vertices[0].probs
        return rank([[x - y for x, y in zip(v.probs, base, strict=True)] for v in self.vertices[1:]])

    @property
    def representative(self) -> int:
        """Smallest action of the tie set; cell rows are written relative to it."""
        return min(self.tie_set)

    def contains(self, belief: Belief) -> bool:
        """Whether ``belief`` lies in the closed cell."""
        return self.region.is_feasible_point(belief.probs)


def _difference(game: GameSpec, a: int, b: int) -> tuple[Fraction, ...]:
    return tuple(x - y for x, y in zip(game.u_receiver[a], game.u_receiver[b], strict=True))


def tie_rows(game: GameSpec, tie_set: frozenset[int]) -> tuple[list[Constraint], list[tuple[Fraction, ...]]]:
    """Rows describing a closed cell, without the simplex rows.

    Returns:
        The indifference equalities inside ``tie_set`` and the homogeneous
        coefficient vectors ``g`` of the inequalities ``g @ mu >= 0`` against
        every action outside it.
    """
    a0 = min(tie_set)
    equalities = [
        Constraint(_difference(game, a0, a), Relation.EQ, Fraction(0))
        for a in sorted(tie_set)
        if a != a0
    ]
    outside = [_difference(game, a0, b) for b in range(game.n_actions) if b not in tie_set]
    return equalities, outside


def tie_region(game: GameSpec, tie_set: frozenset[int], mask: frozenset[int]) -> LinearProgram:
    """Closed cell of ``tie_set`` on ``Delta(mask)`` as a feasibility program."""
    n = game.n_states
    equalities, outside = tie_rows(game, tie_set)
    rows = [
        *simplex_constraints(n, mask),
        *equalities,
        *(Constraint(g, Relation.GE, Fraction(0)) for g in outside),
    ]
    return LinearProgram(objective=(Fraction(0),) * n, constraints=tuple(rows))


def _strictly_realized(game: GameSpec, tie_set: frozenset[int], mask: frozenset[int]) -> bool:
    """Whether some belief on ``Delta(mask)`` has best-response set exactly ``tie_set``.

    Maximizes the slack ``t <= 1`` of the strict inequalities against outside
    actions; the set is realized iff the optimum is positive.
    """
    n = game.n_states
    equalities, outside = tie_rows(game, tie_set)
    rows = [
        Constraint((*row.coefficients, Fraction(0)), row.relation, row.rhs)
        for row in (*simplex_constraints(n, mask), *equalities)
    ]
    rows.extend(Constraint((*g, Fraction(-1)), Relation.GE, Fraction(0)) for g in outside)
    lp = LinearProgram(
        objective=(*([Fraction(0)] * n), Fraction(1)),
        constraints=tuple(rows),
        lower_bounds=(*([Fraction(0)] * n), None),
        upper_bounds=(*([None] * n), Fraction(1)),
    )
    solution = solve_lp(lp)
    return solution.optimal and solution.value is not None and solution.value > 0


def centroid(points: Iterable[Belief]) -> Belief:
    """Average of finitely many beliefs."""
    points = list(points)
    k = len(points)
    return Belief(tuple(sum(coords, Fraction(0)) / k for coords in zip(*(p.probs for p in points), strict=True)))


def check_desk_scale(game: GameSpec) -> None:
    """Raise :class:`DeskScaleError` for games too large to enumerate."""
    if game.n_states > MAX_STATES or game.n_actions > MAX_ACTIONS:
        error_msg = (
            f"cell enumeration supports at most {MAX_STATES} states and {MAX_ACTIONS} actions, "
            f"got {game.n_states} and {game.n_actions}"
        )
        logger.error(error_msg)
        raise DeskScaleError(error_msg)


@lru_cache(maxsize=512)
def cells_on_mask(game: GameSpec, mask: frozenset[int]) -> tuple[Cell, ...]:
    """Cached cells of ``game`` on ``Delta(mask)``; see :func:`enumerate_cells`."""
    check_desk_scale(game)
    cells = []
    for subset in powerset(range(game.n_actions)):
        if not subset:
            continue
        tie_set = frozenset(subset)
        if not _strictly_realized(game, tie_set, mask):
            continue
        region = tie_region(game, tie_set, mask)
        vertices = tuple(cell_vertices(region))
        witness = centroid(vertices)
        if best_responses(game, witness) != tie_set:
            logger.warning("Discarding tie set %s: witness has another argmax", sorted(tie_set))
            continue
        cells.append(Cell(tie_set, vertices, witness, mask, region))
    cells.sort(key=lambda c: (sorted(c.tie_set), [v.probs for v in c.vertices]))
    logger.debug("Enumerated %d cells on mask %s", len(cells), sorted(mask))
    return tuple(cells)


def enumerate_cells(game: GameSpec, support_mask: Iterable[int] | None = None) -> list[Cell]:
    """All cells of the best-response arrangement on ``Delta(support_mask)``.

    Args:
        game: The persuasion game.
        support_mask: States allowed positive probability; all states when omitted.

    Returns:
        Cells sorted by tie set, then by vertex list. Results are cached per game and mask.

    Raises:
        DeskScaleError: For games beyond ``MAX_STATES`` states or ``MAX_ACTIONS`` actions.
        ParameterError: If the mask is empty.
    """
    mask = game.full_mask if support_mask is None else frozenset(support_mask)
    if not mask:
        raise ParameterError("support mask must be nonempty")
    return list(cells_on_mask(game, mask))
