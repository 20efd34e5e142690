"""Diagonal constructions over digit streams and quotient streams.

The decimal construction picks digit 5 wherever the diagonal digit is
not 5 and 4 where it is, so the built digit differs from the diagonal
and is never 0 or 9 (which dodges the dual 9-tail representations).
The continued-fraction construction adds 1 to each diagonal quotient,
so the built quotient differs and is never 0.

Over the rationals the continued-fraction diagonal cannot be built at
all: every rational has a finite quotient list, and
`cf_diagonal_over_rationals` returns the first row too short to supply
its own diagonal entry, as a checkable certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import ClassVar, Iterable, NamedTuple, Sequence

from .continued_fraction import ContinuedFraction, from_rational
from .enumeration import CFStream, DigitStream, digits_of
from .errors import DomainError, InputError, RangeError
from .exact_numbers import Rational


@dataclass(frozen=True)
class DiagonalWitness:
    """Position k, the diagonal entry there, and what was built instead."""

    position: int
    enumerated: int  # d_kk or a_kk
    constructed: int  # d_0k or a_0k


@dataclass(frozen=True)
class DecimalDiagonalResult:
    """Digit prefix of the built number plus one witness per position."""

    integer_part: int
    digits: tuple[int, ...]
    witnesses: tuple[DiagonalWitness, ...]

    kind: ClassVar[str] = "decimal"

    def entry(self, position: int) -> int:
        return self.digits[position - 1]

    def __str__(self) -> str:
        return f"{self.integer_part}." + "".join(str(d) for d in self.digits)


@dataclass(frozen=True)
class CFDiagonalResult:
    """Quotient prefix [a_00; a_01, ...] plus one witness per position."""

    terms: tuple[int, ...]
    witnesses: tuple[DiagonalWitness, ...]

    kind: ClassVar[str] = "cf"

    def entry(self, position: int) -> int:
        return self.terms[position]

    def as_continued_fraction(self) -> ContinuedFraction:
        return ContinuedFraction(self.terms)

    def __str__(self) -> str:
        return str(self.as_continued_fraction())


class VerifyResult(NamedTuple):
    ok: bool
    counterexample: int | None


@dataclass(frozen=True)
class CFDiagonalFailure:
    """Certificate that row k has no k-th partial quotient."""

    failing_index: int
    rational: Rational
    cf: ContinuedFraction

    @property
    def quotients_beyond_first(self) -> int:
        return len(self.cf.terms) - 1

    def message(self) -> str:
        k = self.failing_index
        return (
            f"diagonal undefined at k={k}: CF of "
            f"{self.rational.numerator}/{self.rational.denominator} "
            f"= {self.cf} has no a_{k}{k}"
        )


@dataclass(frozen=True)
class PeriodRuling:
    """Whether a digit prefix is consistent with one (preperiod, period) shape.

    Inconsistency always names a concrete witness: the first position j
    past the preperiod whose digit differs from the digit at j + period.
    """

    preperiod: int
    period: int
    consistent: bool
    witness_position: int | None


@dataclass(frozen=True)
class RationalDiagonalReport:
    """Diagonal digits over an enumeration of rationals, plus the shapes
    of eventually periodic expansions that the prefix rules out."""

    depth: int
    max_preperiod: int
    max_period: int
    diagonal: DecimalDiagonalResult
    rulings: tuple[PeriodRuling, ...]

    @property
    def ruled_out(self) -> tuple[PeriodRuling, ...]:
        return tuple(r for r in self.rulings if not r.consistent)


def _check_fresh(row) -> None:
    if isinstance(row, (DigitStream, CFStream)) and row.position != 0:
        raise InputError(
            "row stream already consumed; recreate streams to rewind"
        )


def _nth_entry(row, position: int, kind: str) -> int:
    # decimal rows: position k is the k-th fractional digit;
    # cf rows: position k is the quotient at index k (a_0 is index 0)
    steps = position if kind == "decimal" else position + 1
    it = iter(row)
    last = None
    taken = 0
    try:
        for _ in range(steps):
            last = next(it)
            taken += 1
    except StopIteration:
        raise InputError(
            f"row exhausted after {taken} entries; position {position} needed"
        ) from None
    return last


def decimal_diagonal(rows: Sequence, depth: int):
    """Build d_0k = 5 (or 4 when the diagonal digit is 5) for k = 1..depth.

    Row k is consumed up to its k-th digit. Returns the digit prefix of
    the built number (integer part 0) along with per-position witnesses.
    """
    if depth < 1:
        raise DomainError("depth must be >= 1")
    rows = list(rows)
    if len(rows) < depth:
        raise InputError(f"need {depth} rows, got {len(rows)}")
    digits: list[int] = []
    witnesses: list[DiagonalWitness] = []
    for k in range(1, depth + 1):
        row = rows[k - 1]
        _check_fresh(row)
        d_kk = _nth_entry(row, k, "decimal")
        if not 0 <= d_kk <= 9:
            raise DomainError(f"digit out of range: {d_kk}")
        d_0k = 5 if d_kk != 5 else 4
        digits.append(d_0k)
        witnesses.append(DiagonalWitness(k, d_kk, d_0k))
    return DecimalDiagonalResult(0, tuple(digits), tuple(witnesses))


def cf_diagonal(rows: Sequence, depth: int):
    """Build a_00 = 0 and a_0k = a_kk + 1 for k = 1..depth."""
    if depth < 1:
        raise DomainError("depth must be >= 1")
    rows = list(rows)
    if len(rows) < depth:
        raise InputError(f"need {depth} rows, got {len(rows)}")
    terms: list[int] = [0]  # a_00 fixed at 0 for reproducible output
    witnesses: list[DiagonalWitness] = []
    for k in range(1, depth + 1):
        row = rows[k - 1]
        _check_fresh(row)
        a_kk = _nth_entry(row, k, "cf")
        a_0k = a_kk + 1
        terms.append(a_0k)
        witnesses.append(DiagonalWitness(k, a_kk, a_0k))
    return CFDiagonalResult(tuple(terms), tuple(witnesses))


def _infer_kind(constructed, rows) -> str:
    if isinstance(constructed, (DecimalDiagonalResult, CFDiagonalResult)):
        return constructed.kind
    if rows and isinstance(rows[0], CFStream):
        return "cf"
    if rows and isinstance(rows[0], DigitStream):
        return "decimal"
    raise InputError("cannot infer stream kind; pass kind='decimal' or kind='cf'")


def verify_differs(constructed, rows: Sequence, depth: int, kind: str | None = None) -> VerifyResult:
    """Re-check that the built prefix differs from row k at position k.

    `constructed` is a diagonal result or a plain entry sequence (for
    decimal rows item 0 is position 1; for cf rows item 0 is a_00).
    Rows are consumed, so pass fresh streams. Returns the first failing
    position as the counterexample; depth 0 is vacuously true.
    """
    if depth == 0:
        return VerifyResult(True, None)
    if depth < 0:
        raise DomainError("depth must be >= 0")
    rows = list(rows)
    if len(rows) < depth:
        raise InputError(f"need {depth} rows, got {len(rows)}")
    if kind is None:
        kind = _infer_kind(constructed, rows)
    if kind not in ("decimal", "cf"):
        raise DomainError(f"unknown kind: {kind!r}")
    if hasattr(constructed, "entry"):
        entry = constructed.entry
    else:
        seq = list(constructed)
        offset = 0 if kind == "cf" else -1
        def entry(position: int) -> int:
            return seq[position + offset]
    for k in range(1, depth + 1):
        row = rows[k - 1]
        _check_fresh(row)
        row_entry = _nth_entry(row, k, kind)
        try:
            built = entry(k)
        except IndexError:
            raise InputError(f"constructed prefix has no entry for position {k}") from None
        if built == row_entry:
            return VerifyResult(False, k)
    return VerifyResult(True, None)


def cf_diagonal_over_rationals(enumeration: Iterable[Rational]) -> CFDiagonalFailure:
    """First k whose k-th rational has no k-th partial quotient.

    Every rational's quotient list is finite while the required index
    grows with k, so any enumeration that ever yields a value with a
    short list terminates the scan; one that hits an integer (as any
    enumeration of all positive rationals must) ends at that point or
    earlier.
    """
    for k, value in enumerate(enumeration, start=1):
        cf = from_rational(value)
        if len(cf.terms) - 1 < k:
            return CFDiagonalFailure(k, value, cf)
    raise InputError("enumeration ended without exposing a missing diagonal entry")


def rule_out_periods(
    digits: Sequence[int], max_preperiod: int, max_period: int
) -> list[PeriodRuling]:
    """Test a digit prefix against every (preperiod, period) shape in range.

    A shape is ruled out only by two concrete in-prefix positions j and
    j + period, both past the preperiod, holding different digits; the
    first such j is recorded. Everything else is reported consistent:
    a finite prefix can rule shapes out but can never certify one.
    """
    if max_preperiod < 0:
        raise DomainError("max_preperiod must be >= 0")
    if max_period < 1:
        raise DomainError("max_period must be >= 1")
    n = len(digits)
    rulings: list[PeriodRuling] = []
    for p in range(max_preperiod + 1):
        for l in range(1, max_period + 1):
            witness = None
            for j in range(p + 1, n - l + 1):  # 1-based positions
                if digits[j - 1] != digits[j + l - 1]:
                    witness = j
                    break
            rulings.append(PeriodRuling(p, l, witness is None, witness))
    return rulings


def rational_diagonal_analysis(
    enumeration: Iterable[Rational],
    depth: int,
    max_preperiod: int,
    max_period: int,
) -> RationalDiagonalReport:
    """Diagonalize the first `depth` rationals' digit streams, then report
    which small (preperiod, period) shapes the built prefix rules out.

    Requires depth >= max_preperiod + 2*max_period so every candidate
    shape gets at least one full period-against-period comparison.
    """
    if max_preperiod < 0:
        raise DomainError("max_preperiod must be >= 0")
    if max_period < 1:
        raise DomainError("max_period must be >= 1")
    if depth < max_preperiod + 2 * max_period:
        raise RangeError(
            f"depth {depth} is less than max_preperiod + 2*max_period "
            f"= {max_preperiod + 2 * max_period}"
        )
    values = list(itertools.islice(iter(enumeration), depth))
    if len(values) < depth:
        raise InputError(f"enumeration supplied {len(values)} of {depth} values")
    rows = [digits_of(v) for v in values]
    diagonal = decimal_diagonal(rows, depth)
    rulings = tuple(rule_out_periods(diagonal.digits, max_preperiod, max_period))
    return RationalDiagonalReport(depth, max_preperiod, max_period, diagonal, rulings)


def format_witnesses(
    witnesses: Sequence[DiagonalWitness], kind: str = "decimal", fmt: str = "table"
) -> str:
    """Witness table: aligned columns, or "k<TAB>diag<TAB>constructed" rows."""
    if kind == "decimal":
        diag_label, built_label = "d_kk", "d_0k"
    elif kind == "cf":
        diag_label, built_label = "a_kk", "a_0k"
    else:
        raise DomainError(f"unknown kind: {kind!r}")
    if fmt == "tsv":
        return "\n".join(
            f"{w.position}\t{w.enumerated}\t{w.constructed}" for w in witnesses
        )
    if fmt != "table":
        raise DomainError(f"unknown format: {fmt!r}")
    lines = [f"{'k':>6}  {diag_label:>8}  {built_label:>8}  differs"]
    for w in witnesses:
        differs = "yes" if w.constructed != w.enumerated else "no"
        lines.append(
            f"{w.position:>6}  {w.enumerated:>8}  {w.constructed:>8}  {differs}"
        )
    return "\n".join(lines)
