"""Membership of the receiver's payoffs in the generic set.

For every action ``a`` and nonempty state subset ``T`` let
``phi(a, T) = max over mu in Delta(T) of min over a' != a of
(u_R(a) - u_R(a')) @ mu``. The receiver matrix is generic when no ``phi``
vanishes; then every action that is somewhere optimal is somewhere uniquely
optimal, on every face of the simplex.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from more_itertools import powerset

from pypersuade.diagnostics.pubr import margin_program
from pypersuade.game.errors import ParameterError
from pypersuade.game.model import GameSpec
from pypersuade.geometry.cells import check_desk_scale
from pypersuade.geometry.lp import solve_lp
from pypersuade.parallel import parallel_map

logger = logging.getLogger(__name__)

Index = tuple[int, frozenset[int]]


@dataclass(frozen=True)
class GenericityReport:
    """All ``phi`` values and the indices at which they vanish."""

    in_u_r: bool
    failing_indices: tuple[Index, ...]
    phi_values: dict[Index, Fraction] = field(compare=False)

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if self.in_u_r != (not self.failing_indices):
            raise ParameterError("in_u_r must hold exactly when no index fails")


def phi(game: GameSpec, index: Index) -> Fraction:
    """Exact value of ``phi`` at ``(action, states)``."""
    action, states = index
    solution = solve_lp(margin_program(game, action, states))
    if solution.value is None:
        error_msg = f"phi program is {solution.status.value} at {index}"
        logger.error(error_msg)
        raise RuntimeError(error_msg)
    return solution.value


def genericity_indices(game: GameSpec) -> list[Index]:
    """Every ``(action, nonempty state subset)``, ordered by subset then action."""
    subsets = [frozenset(s) for s in powerset(range(game.n_states)) if s]
    return [(a, s) for s in subsets for a in range(game.n_actions)]


def genericity_check(game: GameSpec, jobs: int = 1) -> GenericityReport:
    """Evaluate every ``phi`` and report the vanishing ones.

    Raises:
        DeskScaleError: For games beyond the enumeration limits (``2^|Theta|`` subsets).
    """
    check_desk_scale(game)
    indices = genericity_indices(game)
    values = parallel_map(partial(phi, game), indices, jobs=jobs)
    phi_values = dict(zip(indices, values, strict=True))
    failing = tuple(i for i in indices if phi_values[i] == 0)
    logger.info("Genericity: %d of %d indices vanish", len(failing), len(indices))
    return GenericityReport(in_u_r=not failing, failing_indices=failing, phi_values=phi_values)
