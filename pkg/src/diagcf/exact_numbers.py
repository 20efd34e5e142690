"""Exact rational arithmetic.

The universal value type is `fractions.Fraction`, aliased to `Rational`.
It already keeps exactly the representation the rest of the package
relies on: always reduced, denominator >= 1, sign carried by the
numerator, zero stored as 0/1. The helpers here add the domain errors
and the textual form used by the CLI.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError

Rational = Fraction

LESS, EQUAL, GREATER = -1, 0, 1

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def make_rational(num: int, den: int) -> Rational:
    """Reduced fraction num/den; the sign ends up on the numerator."""
    if den == 0:
        raise DomainError("zero denominator")
    return Fraction(num, den)


def reciprocal(x: Rational) -> Rational:
    """1/x, reduced; the sign stays on the numerator."""
    if x == 0:
        raise DomainError("reciprocal of zero")
    return 1 / x


def add(x: Rational, y: Rational) -> Rational:
    return x + y


def sub(x: Rational, y: Rational) -> Rational:
    return x - y


def mul(x: Rational, y: Rational) -> Rational:
    return x * y


def compare(x: Rational, y: Rational) -> int:
    """Total order consistent with the reals: -1, 0 or 1."""
    if x < y:
        return LESS
    if x > y:
        return GREATER
    return EQUAL


def to_string(x: Rational) -> str:
    """"p/q" in lowest terms, or plain "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse "p", "-p" or "p/q"; digit strings may be arbitrarily long."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise DomainError(f"invalid rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        return make_rational(int(num), int(den))
    return Fraction(int(s))
