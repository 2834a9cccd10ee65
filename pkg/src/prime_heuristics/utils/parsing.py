"""Parsers for integer, tuple and polynomial specs given on the command line."""

import re
from decimal import Decimal, InvalidOperation

from ..core.types import IntPolynomial, OffsetTuple
from ..exceptions import ParseError

# sign, optional coefficient with optional '*', optional x or x^n
_TERM = re.compile(
    r"(?P<sign>[+-]?)(?:(?P<coef>\d+)(?P<star>\*)?)?(?P<var>x(?:\^(?P<power>\d+))?)?"
)
_TERMS = re.compile(r"[+-]?[^+-]+")


def parse_scientific_int(text: str) -> int:
    """Parse an integer that may be written in scientific notation.

    Args:
        text: Integer spec (e.g., "1000", "1e8", "2.5e3")

    Returns:
        The exact integer value

    Raises:
        ParseError: If text is not a number or not an integer

    Examples:
        "1e8" -> 100000000
        "2.5e3" -> 2500
        "1.5" -> ParseError
    """
    try:
        value = Decimal(text.strip())
    except InvalidOperation as e:
        raise ParseError(f"Not a number: {text!r}") from e

    if not value.is_finite() or value != value.to_integral_value():
        raise ParseError(f"Not an integer: {text!r}")
    return int(value)


def parse_int_list(text: str) -> list[int]:
    """Parse a comma-separated list of integers, scientific notation allowed.

    Raises:
        ParseError: If any item is empty or not an integer
    """
    items = [item.strip() for item in text.split(",")]
    if any(not item for item in items):
        raise ParseError(f"Empty item in list: {text!r}")
    return [parse_scientific_int(item) for item in items]


def parse_offset_tuple(text: str) -> OffsetTuple:
    """Parse a tuple spec like "0,2,6".

    Raises:
        ParseError: If an offset is not an integer
        ValidationError: If offsets are odd, unsorted or do not start at 0
    """
    return OffsetTuple(tuple(parse_int_list(text)))


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse a polynomial spec in x with integer coefficients.

    Args:
        text: Polynomial spec (e.g., "x^2+1", "2x^3-5x+3", "3*x+1")

    Returns:
        IntPolynomial with like terms combined

    Raises:
        ParseError: If the spec is malformed or has non-integer coefficients
        ValidationError: If the polynomial is constant or its leading
            coefficient is negative
    """
    spec = "".join(text.split()).lower()
    terms = _TERMS.findall(spec)
    if not spec or "".join(terms) != spec:
        raise ParseError(f"Malformed polynomial: {text!r}")

    coefficients: dict[int, int] = {}
    for term in terms:
        match = _TERM.fullmatch(term)
        if match is None or not (match["coef"] or match["var"]):
            raise ParseError(f"Malformed term {term!r} in polynomial {text!r}")
        if match["star"] and not match["var"]:
            raise ParseError(f"Dangling '*' in term {term!r}")

        magnitude = int(match["coef"]) if match["coef"] else 1
        coefficient = -magnitude if match["sign"] == "-" else magnitude
        if not match["var"]:
            power = 0
        else:
            power = int(match["power"]) if match["power"] else 1
        coefficients[power] = coefficients.get(power, 0) + coefficient

    degree = max(coefficients)
    return IntPolynomial(tuple(coefficients.get(p, 0) for p in range(degree + 1)))
