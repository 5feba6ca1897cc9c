"""Sufficient conditions for a unique sender equilibrium payoff."""

from .genericity import GenericityReport, genericity_check
from .ordered import OrderedReport, ordered_check
from .pubr import Theorem1Result, potentially_unique_actions, pubr_at, theorem1_verdict
from .selection import information_selection_check
from .ties import global_uniqueness, no_relevant_ties
from .verdict import UniquenessVerdict, analyze

__all__ = [
    "GenericityReport",
    "OrderedReport",
    "Theorem1Result",
    "UniquenessVerdict",
    "analyze",
    "genericity_check",
    "global_uniqueness",
    "information_selection_check",
    "no_relevant_ties",
    "ordered_check",
    "potentially_unique_actions",
    "pubr_at",
    "theorem1_verdict",
]
