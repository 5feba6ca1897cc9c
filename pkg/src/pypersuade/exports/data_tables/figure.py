"""Generate the value-function table behind the v, w, v-hat, w-hat figure."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import TextIO

from pypersuade.concavify.figure import FigurePoint, figure_points
from pypersuade.exports.data_tables import write_table
from pypersuade.game.model import GameSpec
from pypersuade.game.rationals import approximate, format_rational

logger = logging.getLogger(__name__)

FIGURE_COLUMNS = ("mu", "v", "w", "cavv", "cavw")


@dataclass
class FigureRow:
    """One sampled position on the edge."""

    mu: Fraction
    v: Fraction
    w: Fraction
    cavv: Fraction
    cavw: Fraction

    @classmethod
    def from_point(cls, point: FigurePoint) -> "FigureRow":
        """Row for a sampled figure point."""
        return cls(mu=point.t, v=point.v, w=point.w, cavv=point.cav_v, cavw=point.cav_w)

    def to_table_entry(self) -> dict[str, str]:
        """Convert to figure table entry format.

        Returns:
            Exact ``p/q`` strings per column, followed by ``<column>_approx`` decimals.
        """
        values = {name: getattr(self, name) for name in FIGURE_COLUMNS}
        entry = {name: format_rational(value) for name, value in values.items()}
        entry.update({f"{name}_approx": approximate(value) for name, value in values.items()})
        return entry


class FigureTableBuilder:
    """Builds figure table data from sampled figure points."""

    def __init__(self, points: list[FigurePoint]):
        """Initialize the builder with sampled points.

        Args:
            points: Figure points in increasing edge position.
        """
        self.points = points

    @property
    def fieldnames(self) -> list[str]:
        """Column order of the table."""
        return [*FIGURE_COLUMNS, *(f"{name}_approx" for name in FIGURE_COLUMNS)]

    def build_figure_table(self) -> list[dict[str, str]]:
        """Build the figure table, one row per position.

        Returns:
            List of dictionaries representing figure table entries.
        """
        rows = [FigureRow.from_point(p).to_table_entry() for p in self.points]
        logger.debug("Built figure table with %d rows", len(rows))
        return rows


def emit_figure(
    game: GameSpec,
    n: int,
    out: str | Path | TextIO,
    edge: tuple[int, int] | None = None,
    jobs: int = 1,
    progress: bool = False,
) -> list[dict[str, str]]:
    """Sample the four functions along an edge and write them as CSV.

    Args:
        game: The game; beyond two states ``edge`` is required.
        n: Evenly spaced positions; cell boundaries on the edge are added.
        out: Output path or open text stream.
        edge: States ``(i, j)`` spanning the edge, ``mu`` running from ``i`` to ``j``.
        jobs: Worker processes.
        progress: Whether to display a progress bar.

    Returns:
        The rows written, in increasing ``mu``.

    Raises:
        ParameterError: If ``n < 2`` or the edge is missing or invalid.
    """
    builder = FigureTableBuilder(figure_points(game, n, edge=edge, jobs=jobs, progress=progress))
    rows = builder.build_figure_table()
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="") as stream:
            write_table(rows, builder.fieldnames, stream)
        logger.info("Wrote %d figure rows to %s", len(rows), out)
    else:
        write_table(rows, builder.fieldnames, out)
    return rows
