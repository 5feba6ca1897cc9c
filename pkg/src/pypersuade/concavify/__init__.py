"""Concave envelopes, equilibrium payoff intervals and equilibrium witnesses."""

from .envelope import (
    LowerEnvelope,
    PayoffInterval,
    UpperEnvelope,
    cav_lower,
    cav_restricted,
    cav_upper,
    cav_upper_obedience,
    check_persuasion_sufficient,
    equilibrium_interval,
)
from .policy import TieBreakRule, evaluate_policy
from .witness import EquilibriumWitness, equilibrium_witness

__all__ = [
    "EquilibriumWitness",
    "LowerEnvelope",
    "PayoffInterval",
    "TieBreakRule",
    "UpperEnvelope",
    "cav_lower",
    "cav_restricted",
    "cav_upper",
    "cav_upper_obedience",
    "check_persuasion_sufficient",
    "equilibrium_interval",
    "equilibrium_witness",
    "evaluate_policy",
]
