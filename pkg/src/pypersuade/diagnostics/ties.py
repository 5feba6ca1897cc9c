"""Prior-free uniqueness tests: no relevant ties and global uniqueness."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from pypersuade.concavify.envelope import cav_lower
from pypersuade.game.model import Belief, GameSpec
from pypersuade.geometry.cells import enumerate_cells
from pypersuade.geometry.generators import upper_value_on_cell
from pypersuade.parallel import parallel_map

logger = logging.getLogger(__name__)


def no_relevant_ties(game: GameSpec) -> bool:
    """Whether the sender is indifferent among the receiver's best responses everywhere.

    Sender payoffs are linear on a cell, so equality at every vertex of every
    tie cell is equality on the whole cell.
    """
    for cell in enumerate_cells(game):
        if len(cell.tie_set) < 2:
            continue
        for vertex in cell.vertices:
            if len({game.sender_payoff(a, vertex) for a in cell.tie_set}) > 1:
                logger.debug("Relevant tie %s at %s", game.action_names(cell.tie_set), vertex)
                return False
    return True


@dataclass(frozen=True)
class GlobalCheck:
    """Comparison of w-hat with the favorable piece of a cell at one vertex."""

    belief: Belief
    upper_piece: Fraction
    lower_envelope: Fraction

    @property
    def holds(self) -> bool:
        """Whether w-hat dominates the favorable piece here."""
        return self.lower_envelope >= self.upper_piece


def _lower_at(game: GameSpec, belief: Belief) -> Fraction:
    return cav_lower(game, belief).value


def global_checks(game: GameSpec, jobs: int = 1, progress: bool = False) -> list[GlobalCheck]:
    """Compare w-hat with each cell's favorable piece at every cell vertex.

    The piece minus the concave w-hat is convex on the cell, so vertices suffice.
    """
    pieces: dict[Belief, Fraction] = {}
    for cell in enumerate_cells(game):
        for vertex in cell.vertices:
            value, _ = upper_value_on_cell(game, cell, vertex)
            pieces[vertex] = max(value, pieces.get(vertex, value))
    beliefs = sorted(pieces)
    lowers = parallel_map(partial(_lower_at, game), beliefs, jobs=jobs, desc="global", progress=progress)
    return [GlobalCheck(b, pieces[b], lo) for b, lo in zip(beliefs, lowers, strict=True)]


def global_uniqueness(game: GameSpec, jobs: int = 1) -> bool:
    """Whether w-hat >= v on the whole simplex, i.e. the payoff is unique at every prior."""
    return all(check.holds for check in global_checks(game, jobs=jobs))
