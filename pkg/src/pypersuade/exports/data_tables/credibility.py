"""Generate the credibility bound table from a credibility report."""

import logging

from pypersuade.credibility.robustness import CredibilityReport
from pypersuade.game.rationals import approximate, format_rational

logger = logging.getLogger(__name__)


class CredibilityTableBuilder:
    """Builds the ``(chi, lower bound)`` table of a credibility report."""

    fieldnames = ["chi", "lower_bound", "chi_approx", "lower_bound_approx"]

    def __init__(self, report: CredibilityReport):
        """Initialize the builder with a report.

        Args:
            report: Credibility bounds on a grid of credibility levels.
        """
        self.report = report

    def build_credibility_table(self) -> list[dict[str, str]]:
        """Build one entry per credibility level, in increasing order."""
        return [
            {
                "chi": format_rational(chi),
                "lower_bound": format_rational(bound),
                "chi_approx": approximate(chi),
                "lower_bound_approx": approximate(bound),
            }
            for chi, bound in self.report.rows()
        ]
