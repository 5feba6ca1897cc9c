"""Tabular exports written as comma-separated text."""

import csv
import logging
from collections.abc import Sequence
from typing import TextIO

logger = logging.getLogger(__name__)


def write_table(rows: Sequence[dict[str, str]], fieldnames: Sequence[str], stream: TextIO) -> None:
    """Write ``rows`` under a one-line header."""
    writer = csv.DictWriter(stream, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    logger.debug("Wrote %d rows", len(rows))
