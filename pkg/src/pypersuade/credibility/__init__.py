"""Sender payoff bounds when commitment to the information policy is only partially credible."""

from .robustness import CredibilityReport, chi_one_payoff_set, credibility_lower_bound, robustness_verdict

__all__ = [
    "CredibilityReport",
    "chi_one_payoff_set",
    "credibility_lower_bound",
    "robustness_verdict",
]
