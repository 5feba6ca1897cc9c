"""Brute-force vertex enumeration of small polytopes in the belief simplex.

A vertex is the unique solution of the equality rows together with a choice
of active inequality rows. All choices are tried, so the cost grows like
``C(#inequalities, dimension)``; callers are limited to ``MAX_STATES`` states.
"""

import logging
from fractions import Fraction
from itertools import combinations

from more_itertools import unique_everseen

from pypersuade.game.constants import MAX_STATES, Relation
from pypersuade.game.errors import DeskScaleError
from pypersuade.game.model import Belief
from pypersuade.geometry.linalg import rref, solve_unique
from pypersuade.geometry.lp import LinearProgram

logger = logging.getLogger(__name__)


def _inequality_rows(region: LinearProgram) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    n = region.n_variables
    rows = []
    for row in region.constraints:
        if row.relation is not Relation.EQ and any(row.coefficients):
            rows.append((row.coefficients, row.rhs))
    for j, (lo, hi) in enumerate(zip(region.lower_bounds, region.upper_bounds, strict=True)):
        unit = tuple(Fraction(int(i == j)) for i in range(n))
        if lo is not None:
            rows.append((unit, lo))
        if hi is not None:
            rows.append((unit, hi))
    return list(unique_everseen(rows))


def cell_vertices(region: LinearProgram) -> list[Belief]:
    """Exact vertex set of a polytope contained in the simplex.

    Args:
        region: Feasible region (the objective is ignored). Its variables are
            belief coordinates and it must include the row ``sum(x) = 1``.

    Returns:
        Distinct vertices in lexicographic order; empty when the region is empty.

    Raises:
        DeskScaleError: If the region has more than ``MAX_STATES`` coordinates.
    """
    n = region.n_variables
    if n > MAX_STATES:
        error_msg = f"vertex enumeration is limited to {MAX_STATES} states, got {n}"
        logger.error(error_msg)
        raise DeskScaleError(error_msg)
    equalities = [
        [*row.coefficients, row.rhs] for row in region.constraints if row.relation is Relation.EQ
    ]
    reduced, pivots = rref(equalities) if equalities else ([], [])
    if n in pivots:
        return []
    eq_rows = [row[:n] for row in reduced]
    eq_rhs = [row[n] for row in reduced]
    inequalities = _inequality_rows(region)
    found: set[tuple[Fraction, ...]] = set()
    for chosen in combinations(inequalities, n - len(eq_rows)):
        solution = solve_unique(
            eq_rows + [list(a) for a, _ in chosen], eq_rhs + [b for _, b in chosen]
        )
        if solution is not None and region.is_feasible_point(solution):
            found.add(tuple(solution))
    logger.debug("Found %d vertices from %d inequality rows", len(found), len(inequalities))
    return [Belief(v) for v in sorted(found)]
