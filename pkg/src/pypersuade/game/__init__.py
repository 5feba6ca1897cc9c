"""Games, beliefs, policies and the pointwise value functions."""

from .errors import (
    BeliefError,
    DeskScaleError,
    GameValidationError,
    ParameterError,
    PayoffOutOfRangeError,
    PersuasionError,
    PolicyError,
    SoundnessError,
    StateDependentSenderError,
)
from .loader import dump_game, dumps_game, load_game, load_game_file
from .model import Belief, GameSpec, InformationPolicy, Label, ValueInterval
from .values import best_responses, value_interval, value_lower, value_upper

__all__ = [
    "Belief",
    "BeliefError",
    "DeskScaleError",
    "GameSpec",
    "GameValidationError",
    "InformationPolicy",
    "Label",
    "ParameterError",
    "PayoffOutOfRangeError",
    "PersuasionError",
    "PolicyError",
    "SoundnessError",
    "StateDependentSenderError",
    "ValueInterval",
    "best_responses",
    "dump_game",
    "dumps_game",
    "load_game",
    "load_game_file",
    "value_interval",
    "value_lower",
    "value_upper",
]
