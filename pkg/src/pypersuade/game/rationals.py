"""Parsing and formatting of exact rationals."""

import logging
import re
from decimal import Decimal, InvalidOperation, localcontext
from fractions import Fraction

from pypersuade.game.constants import DECIMAL_DIGITS, MAX_DECIMAL_EXPONENT
from pypersuade.game.errors import GameValidationError

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

Numeral = str | int | Fraction | Decimal


def parse_rational(value: Numeral, field: str | None = None) -> Fraction:
    """Convert a numeral from a game document into an exact rational.

    Accepts integers, :class:`~decimal.Decimal` values (as produced by the JSON
    loader for decimal literals), fractions, and strings following either the
    ``[sign]integer[/integer]`` grammar or a decimal literal.

    Args:
        value: The numeral to convert.
        field: Field name reported on failure.

    Returns:
        The exact rational value.

    Raises:
        GameValidationError: If the numeral is malformed or has a zero denominator.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    >>> parse_rational("0.25")
    Fraction(1, 4)
    """
    if isinstance(value, bool):
        raise GameValidationError(f"booleans are not numerals: {value!r}", field)
    if isinstance(value, Fraction | int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return _from_decimal(value, field)
    if not isinstance(value, str):
        raise GameValidationError(f"expected a rational string, got {value!r}", field)
    match = RATIONAL_PATTERN.match(value)
    if match:
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise GameValidationError(f"zero denominator in {value!r}", field)
        return Fraction(int(numerator), int(denominator or 1))
    try:
        decimal = Decimal(value.strip())
    except InvalidOperation as e:
        raise GameValidationError(f"malformed numeral {value!r}", field) from e
    return _from_decimal(decimal, field)


def _from_decimal(value: Decimal, field: str | None) -> Fraction:
    if not value.is_finite():
        raise GameValidationError(f"non-finite numeral {value}", field)
    exponent = value.as_tuple().exponent
    if not isinstance(exponent, int) or abs(exponent) > MAX_DECIMAL_EXPONENT:
        raise GameValidationError(
            f"decimal exponent of {value} outside +-{MAX_DECIMAL_EXPONENT}", field
        )
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Format a rational as ``p/q``, always with an explicit denominator.

    >>> format_rational(Fraction(0))
    '0/1'
    """
    return f"{value.numerator}/{value.denominator}"


def approximate(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Render a display-only decimal approximation with ``digits`` significant digits.

    >>> approximate(Fraction(1, 3), digits=5)
    '0.33333'
    """
    with localcontext() as context:
        context.prec = digits
        decimal = Decimal(value.numerator) / Decimal(value.denominator)
    text = format(decimal.normalize(), "f") if decimal else "0"
    return text


def rational_entry(value: Fraction) -> dict[str, str]:
    """Structured document entry holding the exact value and its approximation."""
    return {"exact": format_rational(value), "approx": approximate(value)}
