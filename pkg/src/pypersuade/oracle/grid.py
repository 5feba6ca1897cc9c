"""Brute-force concavification over a rational grid of beliefs.

The grid oracle restricts policies to beliefs ``k / n`` with integer ``k`` and
evaluates v or w exactly at each of them, so it is independent of the cell
machinery. The grid LP is solved by column generation: a restricted master
over a few grid points is priced against every grid point in integer
arithmetic, and the most improving points are added until none improves.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import NamedTuple

from more_itertools import pairwise
from tqdm import tqdm

from pypersuade.concavify.envelope import solve_generators
from pypersuade.game.constants import GRID_POINT_LIMIT, ORACLE_COLUMN_BATCH, GeneratorKind
from pypersuade.game.errors import DeskScaleError, ParameterError
from pypersuade.game.model import Belief, GameSpec, Matrix
from pypersuade.geometry.cells import enumerate_cells

logger = logging.getLogger(__name__)

Composition = tuple[int, ...]


@dataclass(frozen=True)
class GridSpec:
    """Beliefs with coordinates in ``{0, 1/n, ..., 1}`` on a simplex of ``dimension`` states."""

    resolution: int
    dimension: int

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if self.resolution < 2:
            raise ParameterError(f"grid resolution must be at least 2, got {self.resolution}")
        if self.dimension < 1:
            raise ParameterError(f"grid dimension must be positive, got {self.dimension}")
        if self.n_points > GRID_POINT_LIMIT:
            error_msg = f"grid has {self.n_points} points, above the limit of {GRID_POINT_LIMIT}"
            logger.error(error_msg)
            raise DeskScaleError(error_msg)

    @property
    def n_points(self) -> int:
        """``C(n + d - 1, d - 1)``."""
        return comb(self.resolution + self.dimension - 1, self.dimension - 1)


def compositions(total: int, parts: int) -> Iterator[Composition]:
    """All ways to write ``total`` as an ordered sum of ``parts`` nonnegative integers.

    >>> list(compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    for bars in combinations(range(total + parts - 1), parts - 1):
        edges = (-1, *bars, total + parts - 1)
        yield tuple(right - left - 1 for left, right in pairwise(edges))


def grid_points(n_states: int, n: int, mask: Iterable[int] | None = None) -> Iterator[Belief]:
    """Grid beliefs of resolution ``n`` on ``Delta(mask)``."""
    states = sorted(range(n_states) if mask is None else set(mask))
    GridSpec(n, len(states))
    for counts in compositions(n, len(states)):
        probs = [Fraction(0)] * n_states
        for state, k in zip(states, counts, strict=True):
            probs[state] = Fraction(k, n)
        yield Belief(tuple(probs))


def _integer_matrix(matrix: Matrix) -> tuple[list[list[int]], int]:
    scale = lcm(*(x.denominator for row in matrix for x in row))
    return [[int(x * scale) for x in row] for row in matrix], scale


class _Prices(NamedTuple):
    states: tuple[int, ...]
    denominator: int
    constant: int


@dataclass(frozen=True)
class _Column:
    counts: Composition
    value: int
    ties: frozenset[int]


class _IntegerGrid:
    """Grid points on a mask with v or w scaled to integers.

    A point with counts ``k`` is the belief ``k / n``; its scaled value is
    ``scale * n * value``.
    """

    def __init__(self, game: GameSpec, n: int, kind: GeneratorKind, mask: frozenset[int]):
        self.game = game
        self.n = n
        self.kind = kind
        self.states = sorted(mask)
        receiver, _ = _integer_matrix(game.u_receiver)
        sender, self.scale = _integer_matrix(game.u_sender)
        self.receiver = [[row[s] for s in self.states] for row in receiver]
        self.sender = [[row[s] for s in self.states] for row in sender]

    def column(self, counts: Composition) -> _Column:
        payoffs = [sum(u * k for u, k in zip(row, counts, strict=True)) for row in self.receiver]
        best = max(payoffs)
        ties = frozenset(a for a, p in enumerate(payoffs) if p == best)
        values = [sum(u * k for u, k in zip(self.sender[a], counts, strict=True)) for a in ties]
        value = max(values) if self.kind is GeneratorKind.UPPER else min(values)
        return _Column(counts, value, ties)

    def belief(self, counts: Composition) -> Belief:
        probs = [Fraction(0)] * self.game.n_states
        for state, k in zip(self.states, counts, strict=True):
            probs[state] = Fraction(k, self.n)
        return Belief(tuple(probs))

    def real_value(self, column: _Column) -> Fraction:
        return Fraction(column.value, self.scale * self.n)

    def prices(self, duals: Sequence[Fraction]) -> _Prices:
        """Scale the master duals so that reduced costs become integers."""
        state_duals = [duals[s] for s in self.states]
        weight_dual = duals[-1]
        denominator = lcm(weight_dual.denominator, *(y.denominator for y in state_duals))
        return _Prices(
            states=tuple(int(y * denominator) for y in state_duals),
            denominator=denominator,
            constant=int(weight_dual * denominator) * self.scale * self.n,
        )

    def reduced_cost(self, column: _Column, prices: _Prices) -> int:
        """Reduced cost of ``column`` times the positive factor ``scale * n * denominator``."""
        price = sum(y * k for y, k in zip(prices.states, column.counts, strict=True))
        return prices.denominator * column.value - self.scale * price - prices.constant


@dataclass(frozen=True)
class GridEstimate:
    """Grid approximation of v-hat or w-hat.

    ``error_bound`` is the Lipschitz gap ``4 max|u_S| / n``; it bounds the
    distance to the exact envelope only when ``resolved``, i.e. when every
    full-dimensional cell contains a grid point.
    """

    value: Fraction
    error_bound: Fraction
    resolution: int
    kind: GeneratorKind
    resolved: bool
    columns: int = 0


@dataclass(frozen=True)
class GridInterval:
    """Grid approximations of both ends of the payoff interval."""

    lower: GridEstimate
    upper: GridEstimate

    @property
    def lo(self) -> Fraction:
        """Grid value of w-hat."""
        return self.lower.value

    @property
    def hi(self) -> Fraction:
        """Grid value of v-hat."""
        return self.upper.value


def lipschitz_bound(game: GameSpec, n: int) -> Fraction:
    """``C / n`` with ``C = 2 max|u_S|`` times the L1 diameter 2 of the simplex."""
    largest = max(abs(x) for row in game.u_sender for x in row)
    return 4 * largest / n


def _full_dimensional_ties(game: GameSpec, mask: frozenset[int]) -> set[frozenset[int]]:
    return {c.tie_set for c in enumerate_cells(game, mask) if c.dimension == len(mask) - 1}


def grid_cav(
    game: GameSpec,
    prior: Belief | None,
    n: int,
    kind: GeneratorKind = GeneratorKind.UPPER,
    progress: bool = False,
) -> GridEstimate:
    """Concavify v (``UPPER``) or w (``LOWER``) over the grid of resolution ``n``.

    Policies are restricted to grid beliefs on the face of the prior's
    support, so both estimates are lower bounds for the exact envelopes.

    Raises:
        ParameterError: If ``n < 2``.
        DeskScaleError: If the grid has more than ``GRID_POINT_LIMIT`` points.
    """
    prior = game.prior if prior is None else prior
    game.check_belief(prior)
    mask = prior.support
    spec = GridSpec(n, len(mask))
    grid = _IntegerGrid(game, n, kind, mask)
    logger.debug("Scanning %d grid points for the %s envelope", spec.n_points, kind.value)
    scan = tqdm(compositions(n, len(mask)), total=spec.n_points, desc="grid", disable=not progress)
    all_columns = [grid.column(counts) for counts in scan]

    corners = [c for c in all_columns if max(c.counts) == n]
    master = {c.counts: c for c in corners}
    while True:
        chosen = sorted(master.values(), key=lambda c: c.counts)
        points = [grid.belief(c.counts) for c in chosen]
        optimum = solve_generators(points, [grid.real_value(c) for c in chosen], prior)
        prices = grid.prices(optimum.duals)
        improving = [
            (cost, column)
            for column in all_columns
            if column.counts not in master and (cost := grid.reduced_cost(column, prices)) > 0
        ]
        if not improving:
            break
        improving.sort(key=lambda pair: pair[0], reverse=True)
        for _, column in improving[:ORACLE_COLUMN_BATCH]:
            master[column.counts] = column
        logger.debug("Grid master grew to %d columns", len(master))

    seen = {c.ties for c in all_columns}
    resolved = _full_dimensional_ties(game, mask) <= seen
    estimate = GridEstimate(
        value=optimum.value,
        error_bound=lipschitz_bound(game, n),
        resolution=n,
        kind=kind,
        resolved=resolved,
        columns=len(master),
    )
    logger.info("Grid %s envelope at %s, n=%d: %s", kind.value, prior, n, estimate.value)
    return estimate


def brute_force_interval(game: GameSpec, prior: Belief | None, n: int, progress: bool = False) -> GridInterval:
    """Grid approximations of ``[w-hat(prior), v-hat(prior)]``."""
    return GridInterval(
        lower=grid_cav(game, prior, n, GeneratorKind.LOWER, progress=progress),
        upper=grid_cav(game, prior, n, GeneratorKind.UPPER, progress=progress),
    )
