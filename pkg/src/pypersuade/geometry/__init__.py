"""Exact linear programming and the cell decomposition of the belief simplex."""

from .caratheodory import is_affinely_independent, reduce_support
from .cells import Cell, enumerate_cells
from .generators import Generator, lower_generators, minimum_lower_value, upper_generators
from .lp import Constraint, LinearProgram, LpSolution, solve_lp
from .vertices import cell_vertices

__all__ = [
    "Cell",
    "Constraint",
    "Generator",
    "LinearProgram",
    "LpSolution",
    "cell_vertices",
    "enumerate_cells",
    "is_affinely_independent",
    "lower_generators",
    "minimum_lower_value",
    "reduce_support",
    "solve_lp",
    "upper_generators",
]
