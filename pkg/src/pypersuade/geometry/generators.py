"""Generators feeding the concavification programs.

An upper generator is a cell vertex valued by the favorable linear piece of
the cell. The adversarial value ``min`` over the tie set is concave on a cell,
so each cell is further split into sender regions, one per tied action ``b``
on which ``b`` is the sender-worst choice; lower generators are the vertices
of those regions, valued by ``b``'s payoff. Values are closure limits taken
from the cell's relative interior, so a generator is ``exact`` only when the
value function itself attains that value at the point.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from pypersuade.game.constants import GeneratorKind, Relation
from pypersuade.game.model import Belief, GameSpec
from pypersuade.game.values import value_lower, value_upper
from pypersuade.geometry.cells import Cell, cells_on_mask
from pypersuade.geometry.lp import Constraint, LinearProgram
from pypersuade.geometry.vertices import cell_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """A (belief, value) pair with the cell it was taken from.

    Attributes:
        point: A vertex of the source cell (or sender region).
        value: Closure value of the selected linear piece at ``point``.
        source_tie_set: Tie set of the source cell.
        kind: Whether this feeds the upper or the lower envelope.
        action: The action whose sender payoff gives ``value``.
        anchor: Interior witness of the source cell.
        exact: Whether the value function equals ``value`` at ``point``.
    """

    point: Belief
    value: Fraction
    source_tie_set: frozenset[int]
    kind: GeneratorKind
    action: int
    anchor: Belief = field(compare=False)
    exact: bool = field(compare=False, default=True)


@dataclass(frozen=True)
class SenderRegion:
    """Part of a cell on which ``action`` is the sender-worst tied action."""

    cell: Cell
    action: int
    sender_rows: tuple[tuple[Fraction, ...], ...]
    vertices: tuple[Belief, ...]
    region: LinearProgram = field(repr=False)


def upper_value_on_cell(game: GameSpec, cell: Cell, point: Belief) -> tuple[Fraction, int]:
    """Favorable linear piece of ``cell`` at ``point`` and the action attaining it."""
    value, action = max((game.sender_payoff(a, point), -a) for a in cell.tie_set)
    return value, -action


@lru_cache(maxsize=512)
def _upper(game: GameSpec, mask: frozenset[int]) -> tuple[Generator, ...]:
    generators = []
    for cell in cells_on_mask(game, mask):
        for vertex in cell.vertices:
            value, action = upper_value_on_cell(game, cell, vertex)
            generators.append(
                Generator(
                    point=vertex,
                    value=value,
                    source_tie_set=cell.tie_set,
                    kind=GeneratorKind.UPPER,
                    action=action,
                    anchor=cell.interior_witness,
                    exact=value == value_upper(game, vertex),
                )
            )
    return tuple(generators)


def _sender_rows(game: GameSpec, tie_set: frozenset[int], action: int) -> tuple[tuple[Fraction, ...], ...]:
    worst = game.u_sender[action]
    return tuple(
        tuple(x - y for x, y in zip(game.u_sender[a], worst, strict=True))
        for a in sorted(tie_set)
        if a != action
    )


@lru_cache(maxsize=512)
def _regions(game: GameSpec, mask: frozenset[int]) -> tuple[SenderRegion, ...]:
    regions = []
    for cell in cells_on_mask(game, mask):
        for action in sorted(cell.tie_set):
            rows = _sender_rows(game, cell.tie_set, action)
            region = LinearProgram(
                objective=cell.region.objective,
                constraints=(
                    *cell.region.constraints,
                    *(Constraint(g, Relation.GE, Fraction(0)) for g in rows),
                ),
            )
            vertices = tuple(cell_vertices(region)) if rows else cell.vertices
            if vertices:
                regions.append(SenderRegion(cell, action, rows, vertices, region))
    return tuple(regions)


@lru_cache(maxsize=512)
def _lower(game: GameSpec, mask: frozenset[int]) -> tuple[Generator, ...]:
    generators = []
    for region in _regions(game, mask):
        for vertex in region.vertices:
            value = game.sender_payoff(region.action, vertex)
            generators.append(
                Generator(
                    point=vertex,
                    value=value,
                    source_tie_set=region.cell.tie_set,
                    kind=GeneratorKind.LOWER,
                    action=region.action,
                    anchor=region.cell.interior_witness,
                    exact=value == value_lower(game, vertex),
                )
            )
    return tuple(generators)


def _mask(game: GameSpec, support_mask: Iterable[int] | None) -> frozenset[int]:
    return game.full_mask if support_mask is None else frozenset(support_mask)


def upper_generators(game: GameSpec, support_mask: Iterable[int] | None = None) -> list[Generator]:
    """Vertices of every cell valued by the cell's favorable piece."""
    return list(_upper(game, _mask(game, support_mask)))


def sender_regions(game: GameSpec, support_mask: Iterable[int] | None = None) -> list[SenderRegion]:
    """Nonempty sender regions of every cell."""
    return list(_regions(game, _mask(game, support_mask)))


def lower_generators(game: GameSpec, support_mask: Iterable[int] | None = None) -> list[Generator]:
    """Vertices of every sender region valued by the region's worst action."""
    return list(_lower(game, _mask(game, support_mask)))


def minimum_lower_value(game: GameSpec) -> Fraction:
    """Minimum of w over the whole simplex.

    Every belief lies in the relative interior of its own cell, where w is the
    minimum of the region pieces, so the smallest lower generator value is
    attained by w.
    """
    return min(g.value for g in _lower(game, game.full_mask))
