"""Exception hierarchy for persuasion computations.

Outcomes of linear programs are reported as statuses, never raised. The
exceptions below cover invalid input, requests beyond desk scale, and
internal cross-checks that must never fail silently.
"""


class PersuasionError(Exception):
    """Base exception for all errors raised by :mod:`pypersuade`."""


class GameValidationError(PersuasionError, ValueError):
    """A game document or game object is malformed.

    Args:
        message: Human readable description.
        field: Name of the offending document field, e.g. ``"prior"``.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


class BeliefError(PersuasionError, ValueError):
    """A belief is not a probability vector of the expected dimension."""


class PolicyError(PersuasionError, ValueError):
    """An information policy or tie-breaking rule is malformed."""


class ParameterError(PersuasionError, ValueError):
    """A numeric parameter (credibility level, slack, resolution) is out of range."""


class DeskScaleError(PersuasionError):
    """The request exceeds the sizes the exact enumeration routines accept."""


class PayoffOutOfRangeError(PersuasionError, ValueError):
    """A target payoff lies outside the equilibrium payoff interval."""


class StateDependentSenderError(PersuasionError, ValueError):
    """An operation requiring a state-independent sender payoff received a dependent one."""


class SoundnessError(PersuasionError):
    """A sufficient uniqueness test contradicted the exact payoff interval."""
