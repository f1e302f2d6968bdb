"""Exact rational scalars.

``Rational`` is the standard-library ``fractions.Fraction``: arbitrary
precision, always reduced, denominator positive, zero stored as 0/1 --
exactly the invariants the rest of the package relies on, so no wrapper
class is introduced.  What this module adds is the strict text format used
on every CLI/JSON surface: ``p/q`` in lowest terms, or ``p`` alone when the
denominator is 1.  Decimal and exponent notation are rejected outright so
nothing is ever rounded on the way in.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, DomainError

Rational = Fraction

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:\s*/\s*(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into an exact Fraction.

    Anything else (decimals, exponents, a zero denominator) is an error.
    """
    m = _RATIONAL_RE.fullmatch(text.strip())
    if not m:
        raise DomainError(f"not an exact rational 'p' or 'p/q': {text!r}")
    numerator = int(m.group(1))
    denominator = int(m.group(2)) if m.group(2) else 1
    if denominator == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    """Lowest-terms text: ``p/q``, or just ``p`` when the denominator is 1."""
    return str(Fraction(value))


def as_exact(value) -> Fraction:
    """Coerce an int or Fraction; refuse floats (no silent rounding)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"not an exact scalar: {value!r}")
