"""Sampling v, w, v-hat and w-hat along an edge of the simplex."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from pypersuade.concavify.envelope import cav_lower, cav_upper
from pypersuade.game.errors import ParameterError
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.values import value_interval
from pypersuade.geometry.cells import enumerate_cells
from pypersuade.parallel import parallel_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FigurePoint:
    """Values of the four functions at the belief putting ``t`` on the edge's second state."""

    t: Fraction
    belief: Belief
    v: Fraction
    w: Fraction
    cav_v: Fraction
    cav_w: Fraction


def edge_belief(n_states: int, edge: tuple[int, int], t: Fraction) -> Belief:
    """``(1 - t) * delta_i + t * delta_j`` for ``edge = (i, j)``."""
    first, second = edge
    probs = [Fraction(0)] * n_states
    probs[first] += 1 - t
    probs[second] += t
    return Belief(tuple(probs))


def sample_positions(game: GameSpec, n: int, edge: tuple[int, int]) -> list[Fraction]:
    """``n`` evenly spaced positions on the edge plus every cell boundary on it."""
    if n < 2:
        raise ParameterError(f"at least two sample points are needed, got {n}")
    first, second = edge
    positions = {Fraction(k, n - 1) for k in range(n)}
    for cell in enumerate_cells(game, {first, second}):
        positions.update(v[second] for v in cell.vertices)
    return sorted(positions)


def figure_point(game: GameSpec, edge: tuple[int, int], t: Fraction) -> FigurePoint:
    """All four values at one position on the edge."""
    belief = edge_belief(game.n_states, edge, t)
    interval = value_interval(game, belief)
    return FigurePoint(
        t=t,
        belief=belief,
        v=interval.hi,
        w=interval.lo,
        cav_v=cav_upper(game, belief).value,
        cav_w=cav_lower(game, belief).value,
    )


def figure_points(
    game: GameSpec, n: int, edge: tuple[int, int] | None = None, jobs: int = 1, progress: bool = False
) -> list[FigurePoint]:
    """Sample the value functions and their envelopes along an edge.

    Args:
        game: The persuasion game.
        n: Number of evenly spaced positions, endpoints included.
        edge: Pair of state indices; required when there are more than two states.
        jobs: Worker processes.
        progress: Show a progress bar.

    Returns:
        One point per sampled position, in increasing order.

    Raises:
        ParameterError: If no edge is given for a game with more than two states.
    """
    if edge is None:
        if game.n_states != 2:
            raise ParameterError("games with more than two states need an explicit edge")
        edge = (0, 1)
    if len(set(edge)) != 2 or not all(0 <= i < game.n_states for i in edge):
        raise ParameterError(f"invalid edge {edge}")
    positions = sample_positions(game, n, edge)
    logger.info("Sampling %d positions on edge %s", len(positions), edge)
    return parallel_map(partial(figure_point, game, edge), positions, jobs=jobs, desc="figure", progress=progress)
