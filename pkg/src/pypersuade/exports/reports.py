"""Structured report documents.

Every rational is emitted as an entry holding the exact ``p/q`` string and a
display-only decimal approximation, so reports re-parse exactly.
"""

import logging
from collections.abc import Iterable, Mapping
from typing import Any

from pypersuade.concavify.envelope import PayoffInterval
from pypersuade.concavify.witness import EquilibriumWitness
from pypersuade.credibility.robustness import CredibilityReport
from pypersuade.diagnostics.genericity import GenericityReport
from pypersuade.diagnostics.ordered import OrderedReport
from pypersuade.diagnostics.pubr import Theorem1Result
from pypersuade.diagnostics.ties import GlobalCheck
from pypersuade.diagnostics.verdict import UniquenessVerdict
from pypersuade.game.model import Belief, GameSpec, InformationPolicy
from pypersuade.game.rationals import rational_entry
from pypersuade.oracle.grid import GridEstimate, GridInterval

logger = logging.getLogger(__name__)

Document = dict[str, Any]


def belief_entry(game: GameSpec, belief: Belief) -> Document:
    """Probability of each state, keyed by state name."""
    return {state.name: rational_entry(p) for state, p in zip(game.states, belief.probs, strict=True)}


def policy_entry(game: GameSpec, policy: InformationPolicy) -> list[Document]:
    """Support beliefs with their weights."""
    return [{"belief": belief_entry(game, b), "weight": rational_entry(w)} for b, w in policy.support]


def interval_report(game: GameSpec, interval: PayoffInterval) -> Document:
    """The equilibrium payoff interval with both witnesses."""
    return {
        "prior": belief_entry(game, interval.prior),
        "lo": rational_entry(interval.lo),
        "hi": rational_entry(interval.hi),
        "width": rational_entry(interval.width),
        "unique": interval.unique,
        "lo_attained": interval.lo_attained,
        "epsilon": rational_entry(interval.epsilon),
        "lo_witness": policy_entry(game, interval.lo_witness),
        "hi_witness": policy_entry(game, interval.hi_witness),
    }


def _beliefs(game: GameSpec, beliefs: Iterable[Belief]) -> list[Document]:
    return [belief_entry(game, b) for b in beliefs]


def theorem1_entry(game: GameSpec, result: Theorem1Result) -> Document:
    """PUBR theorem outcome on the optimal support."""
    return {
        "applies": result.applies,
        "strong_applies": result.strong_applies,
        "persuasion_sufficient_set": _beliefs(game, result.beliefs),
        "failing": _beliefs(game, result.failing),
    }


def pubr_report(game: GameSpec, potentially_unique: Iterable[int], result: Theorem1Result) -> Document:
    """Potentially unique best responses and the PUBR theorem outcome."""
    return {
        "potentially_unique_actions": game.action_names(potentially_unique),
        "theorem1": theorem1_entry(game, result),
    }


def ordered_entry(game: GameSpec, report: OrderedReport) -> Document:
    """Ordered-model hypothesis checks."""
    return {
        "is_ordered": report.is_ordered.value,
        "increasing_differences": report.increasing_differences,
        "quasi_condition": None if report.quasi_condition is None else report.quasi_condition.value,
        "boundary_condition": report.boundary_condition,
        "extreme_selection": report.extreme_selection,
        "theorem2_applies": report.theorem2_applies,
        "reason": report.reason,
        "violating_belief": None if report.violating_belief is None else belief_entry(game, report.violating_belief),
    }


def genericity_entry(game: GameSpec, report: GenericityReport) -> Document:
    """Genericity membership with the full ``phi`` table."""

    def index(action: int, states: frozenset[int]) -> Document:
        return {"action": game.actions[action].name, "states": [game.states[s].name for s in sorted(states)]}

    return {
        "in_u_r": report.in_u_r,
        "failing_indices": [index(a, s) for a, s in report.failing_indices],
        "phi": [{**index(a, s), "value": rational_entry(v)} for (a, s), v in report.phi_values.items()],
    }


def global_entry(game: GameSpec, checks: Iterable[GlobalCheck]) -> Document:
    """Comparison of w-hat with the favorable pieces at every cell vertex."""
    checks = list(checks)
    return {
        "global_uniqueness": all(c.holds for c in checks),
        "checks": [
            {
                "belief": belief_entry(game, c.belief),
                "v": rational_entry(c.upper_piece),
                "cav_w": rational_entry(c.lower_envelope),
                "holds": c.holds,
            }
            for c in checks
        ],
    }


def verdict_report(game: GameSpec, verdict: UniquenessVerdict) -> Document:
    """Verdict, winning test, the evidence of every test run and the exact interval."""
    evidence = verdict.evidence
    return {
        "verdict": verdict.verdict.value,
        "winning_test": verdict.winning_test.value,
        "evidence": {
            "prior": belief_entry(game, evidence.prior),
            "no_ties": evidence.no_ties,
            "theorem1": None if evidence.theorem1 is None else theorem1_entry(game, evidence.theorem1),
            "ordered": None if evidence.ordered is None else ordered_entry(game, evidence.ordered),
            "global_uniqueness": evidence.global_unique,
        },
        "interval": None if verdict.interval is None else interval_report(game, verdict.interval),
    }


def witness_report(game: GameSpec, witness: EquilibriumWitness) -> Document:
    """Equilibrium realizing a target payoff."""
    return {
        "target": rational_entry(witness.target),
        "lambda": rational_entry(witness.lam),
        "zeta": rational_entry(witness.zeta),
        "realized_payoff": rational_entry(witness.realized_payoff),
        "adversarial_value": rational_entry(witness.lower),
        "favorable_value": rational_entry(witness.upper),
        "policy": policy_entry(game, witness.policy),
    }


def credibility_report(game: GameSpec, report: CredibilityReport) -> Document:
    """Credibility bounds on the grid with the robustness verdict."""
    return {
        "strongly_robust": report.strongly_robust,
        "epsilon": rational_entry(report.epsilon),
        "min_w": rational_entry(report.min_w),
        "limit": rational_entry(report.limit),
        "chi1_interval": interval_report(game, report.chi1_interval),
        "bounds": [{"chi": rational_entry(c), "lower_bound": rational_entry(b)} for c, b in report.rows()],
    }


def _estimate(estimate: GridEstimate) -> Document:
    return {
        "value": rational_entry(estimate.value),
        "error_bound": rational_entry(estimate.error_bound),
        "resolved": estimate.resolved,
        "columns": estimate.columns,
    }


def oracle_report(game: GameSpec, grid: GridInterval, exact: PayoffInterval | None = None) -> Document:
    """Grid estimates of both envelopes, next to the exact interval when given."""
    document: Document = {
        "resolution": grid.upper.resolution,
        "lower": _estimate(grid.lower),
        "upper": _estimate(grid.upper),
    }
    if exact is not None:
        document["exact"] = interval_report(game, exact)
    return document


def _is_rational(value: Any) -> bool:
    return isinstance(value, Mapping) and set(value) == {"exact", "approx"}


def format_human(document: Any, indent: int = 0) -> list[str]:
    """Indented ``key: value`` lines; rationals are shown as ``p/q (approx)``."""
    pad = "  " * indent
    if _is_rational(document):
        return [f"{pad}{document['exact']} ({document['approx']})"]
    lines = []
    if isinstance(document, Mapping):
        for key, value in document.items():
            if _is_rational(value):
                lines.append(f"{pad}{key}: {value['exact']} ({value['approx']})")
            elif isinstance(value, Mapping | list):
                lines.append(f"{pad}{key}:")
                lines.extend(format_human(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(document, list):
        for item in document:
            nested = format_human(item, indent + 1)
            lines.append(f"{pad}-" + (nested[0][len(pad) + 1 :] if nested else ""))
            lines.extend(nested[1:])
    else:
        lines.append(f"{pad}{_scalar(document)}")
    return lines


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)
