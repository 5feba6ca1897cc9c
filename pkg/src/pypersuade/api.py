"""Public entry points of :mod:`pypersuade`.

Load a game, then ask for its equilibrium payoff interval, a uniqueness
verdict, an equilibrium realizing a given payoff, or credibility bounds.

>>> from fractions import Fraction
>>> from pypersuade.api import equilibrium_interval, load_game
>>> judge = load_game(
...     {
...         "states": ["innocent", "guilty"],
...         "actions": ["death", "acquit", "life"],
...         "prior": ["3/4", "1/4"],
...         "u_sender": [[-1, -1], [0, 0], [1, 1]],
...         "u_receiver": [[0, 1], [1, 0], [0, 1]],
...     }
... )
>>> interval = equilibrium_interval(judge)
>>> (interval.lo, interval.hi) == (Fraction(0), Fraction(1, 2))
True
"""

from .concavify import (
    EquilibriumWitness,
    PayoffInterval,
    TieBreakRule,
    cav_lower,
    cav_restricted,
    cav_upper,
    cav_upper_obedience,
    check_persuasion_sufficient,
    equilibrium_interval,
    equilibrium_witness,
    evaluate_policy,
)
from .concavify.figure import figure_points
from .credibility import CredibilityReport, chi_one_payoff_set, credibility_lower_bound, robustness_verdict
from .diagnostics import (
    GenericityReport,
    OrderedReport,
    UniquenessVerdict,
    analyze,
    genericity_check,
    global_uniqueness,
    information_selection_check,
    no_relevant_ties,
    ordered_check,
    potentially_unique_actions,
    pubr_at,
    theorem1_verdict,
)
from .exports.data_tables.figure import emit_figure
from .game import (
    Belief,
    GameSpec,
    InformationPolicy,
    Label,
    best_responses,
    dump_game,
    load_game,
    load_game_file,
    value_interval,
    value_lower,
    value_upper,
)
from .geometry import enumerate_cells, reduce_support, solve_lp
from .oracle import brute_force_interval, grid_cav, perturb_receiver, random_game

__all__ = [
    "Belief",
    "CredibilityReport",
    "EquilibriumWitness",
    "GameSpec",
    "GenericityReport",
    "InformationPolicy",
    "Label",
    "OrderedReport",
    "PayoffInterval",
    "TieBreakRule",
    "UniquenessVerdict",
    "analyze",
    "best_responses",
    "brute_force_interval",
    "cav_lower",
    "cav_restricted",
    "cav_upper",
    "cav_upper_obedience",
    "check_persuasion_sufficient",
    "chi_one_payoff_set",
    "credibility_lower_bound",
    "dump_game",
    "emit_figure",
    "enumerate_cells",
    "equilibrium_interval",
    "equilibrium_witness",
    "evaluate_policy",
    "figure_points",
    "genericity_check",
    "global_uniqueness",
    "grid_cav",
    "information_selection_check",
    "load_game",
    "load_game_file",
    "no_relevant_ties",
    "ordered_check",
    "perturb_receiver",
    "potentially_unique_actions",
    "pubr_at",
    "random_game",
    "reduce_support",
    "robustness_verdict",
    "solve_lp",
    "theorem1_verdict",
    "value_interval",
    "value_lower",
    "value_upper",
]
