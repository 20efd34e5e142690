"""Sources feeding the diagonal constructions.

A bijective enumeration of the positive rationals (Calkin-Wilf), digit
streams for rationals, and infinite partial-quotient streams for a few
named irrationals. Streams are pull-based, single-consumer and carry an
explicit position; rewinding means recreating the stream.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, RangeError
from .exact_numbers import Rational, to_string

# First 48 partial quotients of pi (OEIS A001203), stored rather than
# derived; the stream refuses to go past this table.
PI_PARTIAL_QUOTIENTS: tuple[int, ...] = (
    3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1,
    2, 2, 2, 2, 1, 84, 2, 1, 1, 15, 3, 13, 1, 4, 2, 6,
    6, 99, 1, 2, 2, 6, 3, 5, 1, 1, 6, 8, 1, 7, 1, 2,
)


class RationalEnumeration:
    """Single-consumer iterator of positive rationals with a position counter."""

    def __init__(self, values: Iterable[Rational], description: str = ""):
        self._values = iter(values)
        self.description = description
        self.position = 0  # values yielded so far

    def __iter__(self) -> "RationalEnumeration":
        return self

    def __next__(self) -> Rational:
        value = next(self._values)
        self.position += 1
        return value

    def take(self, n: int) -> list[Rational]:
        return [next(self) for _ in range(n)]

    def __repr__(self) -> str:
        return f"RationalEnumeration({self.description!r}, position={self.position})"


class DigitStream:
    """Fractional digits d_1, d_2, ... of one number, plus its integer part."""

    def __init__(self, digits: Iterable[int], integer_part: int = 0, description: str = ""):
        self._digits = iter(digits)
        self.integer_part = integer_part
        self.description = description
        self.position = 0  # digits yielded so far

    def __iter__(self) -> "DigitStream":
        return self

    def __next__(self) -> int:
        d = next(self._digits)
        if not 0 <= d <= 9:
            raise DomainError(f"digit out of range: {d}")
        self.position += 1
        return d

    def take(self, n: int) -> list[int]:
        return [next(self) for _ in range(n)]

    def __repr__(self) -> str:
        return f"DigitStream({self.description!r}, position={self.position})"


class CFStream:
    """Partial quotients a_0, a_1, a_2, ... of one irrational."""

    def __init__(self, quotients: Iterable[int], description: str = ""):
        self._quotients = iter(quotients)
        self.description = description
        self.position = 0  # index of the next quotient

    def __iter__(self) -> "CFStream":
        return self

    def __next__(self) -> int:
        a = next(self._quotients)
        if self.position == 0:
            if a < 0:
                raise DomainError(f"first partial quotient must be >= 0, got {a}")
        elif a < 1:
            raise DomainError(f"partial quotient at index {self.position} must be >= 1, got {a}")
        self.position += 1
        return a

    def take(self, n: int) -> list[int]:
        return [next(self) for _ in range(n)]

    def __repr__(self) -> str:
        return f"CFStream({self.description!r}, position={self.position})"


def calkin_wilf() -> RationalEnumeration:
    """1/1, 1/2, 2/1, 1/3, 3/2, ...: every positive rational exactly once.

    The successor of p/q is q/(2*floor(p/q)*q + q - p); successive values
    come out already reduced, a property of the sequence rather than of
    the construction here.
    """

    def gen() -> Iterator[Fraction]:
        x = Fraction(1, 1)
        while True:
            yield x
            p, q = x.numerator, x.denominator
            x = Fraction(q, 2 * (p // q) * q + q - p)

    return RationalEnumeration(gen(), "calkin-wilf")


def digits_of(x: Rational) -> DigitStream:
    """Decimal digit stream of x >= 0; trailing zeros run forever."""
    if x < 0:
        raise DomainError("negative input")

    def gen() -> Iterator[int]:
        rem = x.numerator % x.denominator
        den = x.denominator
        while True:
            rem *= 10
            yield rem // den
            rem %= den

    return DigitStream(
        gen(),
        integer_part=x.numerator // x.denominator,
        description=f"digits of {to_string(x)}",
    )


def metallic(k: int) -> CFStream:
    """[k; k, k, k, ...]; k = 1 is the golden ratio."""
    if k < 1:
        raise DomainError("metallic index must be >= 1")
    return CFStream(itertools.repeat(k), f"metallic:{k}")


def _e_quotients() -> Iterator[int]:
    yield 2
    m = 1
    while True:
        yield 1
        yield 2 * m
        yield 1
        m += 1


def _pi_quotients() -> Iterator[int]:
    yield from PI_PARTIAL_QUOTIENTS
    raise RangeError(
        f"pi stream is backed by a fixed table of {len(PI_PARTIAL_QUOTIENTS)} "
        "partial quotients"
    )


def named_cf_stream(name: str) -> CFStream:
    """Fresh stream for sqrt2, e, phi, pi or metallic:<k>."""
    key = name.strip().lower()
    if key == "sqrt2":
        return CFStream(itertools.chain([1], itertools.repeat(2)), "sqrt2")
    if key == "e":
        return CFStream(_e_quotients(), "e")
    if key == "phi":
        return CFStream(itertools.repeat(1), "phi")
    if key == "pi":
        return CFStream(_pi_quotients(), "pi")
    if key.startswith("metallic:"):
        try:
            k = int(key.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"invalid metallic index in {name!r}") from None
        return metallic(k)
    raise DomainError(f"unknown stream name: {name!r}")


def irrational_enumeration(count: int) -> list[CFStream]:
    """metallic(1), ..., metallic(count): pairwise distinct infinite streams."""
    if count < 1:
        raise DomainError("count must be >= 1")
    return [metallic(k) for k in range(1, count + 1)]
