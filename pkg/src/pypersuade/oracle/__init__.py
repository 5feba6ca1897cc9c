"""Brute-force oracles and random games for validating the exact engine."""

from .grid import GridEstimate, GridInterval, GridSpec, brute_force_interval, grid_cav, grid_points
from .random_games import perturb_receiver, random_game

__all__ = [
    "GridEstimate",
    "GridInterval",
    "GridSpec",
    "brute_force_interval",
    "grid_cav",
    "grid_points",
    "perturb_receiver",
    "random_game",
]
