"""Reading and writing game documents.

A game document is a JSON object with keys ``states`` and ``actions`` (lists of
``{"label": ..., "position": ...}``), ``prior`` and the row-major payoff
matrices ``u_sender`` and ``u_receiver``. Numerals are rational strings such as
``"-3/4"`` or decimals; decimals are converted exactly.
"""

import json
import logging
from collections.abc import Mapping
from decimal import Decimal
from pathlib import Path
from typing import Any

from pypersuade.game.errors import BeliefError, GameValidationError
from pypersuade.game.model import Belief, GameSpec, Label
from pypersuade.game.rationals import format_rational, parse_rational

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ("states", "actions", "prior", "u_sender", "u_receiver")


def load_game(source: str | Mapping[str, Any]) -> GameSpec:
    """Parse and validate a game document.

    Args:
        source: JSON text, or an already decoded mapping.

    Returns:
        The validated game.

    Raises:
        GameValidationError: If the document is malformed; ``field`` names the culprit.
    """
    if isinstance(source, str):
        try:
            document = json.loads(source, parse_float=Decimal)
        except json.JSONDecodeError as e:
            error_msg = f"invalid JSON: {e}"
            logger.error(error_msg)
            raise GameValidationError(error_msg, "document") from e
    else:
        document = source
    if not isinstance(document, Mapping):
        raise GameValidationError("a game document must be a JSON object", "document")
    missing = [key for key in REQUIRED_KEYS if key not in document]
    if missing:
        raise GameValidationError(f"missing keys {missing}", missing[0])

    states = _parse_labels(document["states"], "states")
    actions = _parse_labels(document["actions"], "actions")
    prior_values = _parse_vector(document["prior"], "prior")
    try:
        prior = Belief(tuple(prior_values))
    except BeliefError as e:
        raise GameValidationError(str(e), "prior") from e
    game = GameSpec(
        states=states,
        actions=actions,
        prior=prior,
        u_sender=_parse_matrix(document["u_sender"], "u_sender"),
        u_receiver=_parse_matrix(document["u_receiver"], "u_receiver"),
    )
    logger.debug("Loaded %s", game)
    return game


def load_game_file(path: str | Path) -> GameSpec:
    """Read a game document from disk.

    Raises:
        GameValidationError: If the file cannot be read as UTF-8 text or is malformed.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (UnicodeDecodeError, OSError) as e:
        error_msg = f"cannot read game document {path}: {e}"
        logger.error(error_msg)
        raise GameValidationError(error_msg, "document") from e
    return load_game(text)


def dump_game(game: GameSpec) -> dict[str, Any]:
    """Serialize a game to a document that :func:`load_game` reads back exactly."""

    def labels(items: tuple[Label, ...]) -> list[dict[str, str]]:
        out = []
        for label in items:
            entry = {"label": label.name}
            if label.position is not None:
                entry["position"] = format_rational(label.position)
            out.append(entry)
        return out

    return {
        "states": labels(game.states),
        "actions": labels(game.actions),
        "prior": [format_rational(p) for p in game.prior.probs],
        "u_sender": [[format_rational(x) for x in row] for row in game.u_sender],
        "u_receiver": [[format_rational(x) for x in row] for row in game.u_receiver],
    }


def dumps_game(game: GameSpec) -> str:
    """JSON text of :func:`dump_game`."""
    return json.dumps(dump_game(game), indent=2)


def _parse_labels(items: Any, field: str) -> tuple[Label, ...]:
    if not isinstance(items, list):
        raise GameValidationError("expected a list of labels", field)
    labels = []
    for i, item in enumerate(items):
        if isinstance(item, str):
            item = {"label": item}
        if not isinstance(item, Mapping) or not isinstance(item.get("label"), str):
            raise GameValidationError("each entry needs a string 'label'", f"{field}[{i}]")
        position = item.get("position")
        labels.append(
            Label(
                name=item["label"],
                position=None if position is None else parse_rational(position, f"{field}[{i}].position"),
            )
        )
    return tuple(labels)


def _parse_vector(items: Any, field: str) -> list:
    if not isinstance(items, list):
        raise GameValidationError("expected a list of numerals", field)
    return [parse_rational(x, f"{field}[{i}]") for i, x in enumerate(items)]


def _parse_matrix(rows: Any, field: str) -> list[list]:
    if not isinstance(rows, list):
        raise GameValidationError("expected a list of rows", field)
    return [_parse_vector(row, f"{field}[{i}]") for i, row in enumerate(rows)]
