"""Finite simple continued fractions for nonnegative rationals.

Conversion runs in both directions: `from_rational` is the Euclidean
quotient sequence, `to_rational` folds the terms back to front in exact
arithmetic. `from_real_approx` extracts a continued fraction from a
machine real by repeated floor-and-reciprocal, stopping once the exact
value of the accumulated fraction is within a caller-supplied eps.

A rational has two finite representations, [..., a_n] and
[..., a_n - 1, 1]; the canonical form bans the trailing 1 so equality is
structural. Non-canonical term lists are accepted everywhere as input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError, RangeError
from .exact_numbers import Rational


def _validated_terms(terms: Iterable[int]) -> tuple[int, ...]:
    ts = tuple(int(a) for a in terms)
    if not ts:
        raise DomainError("empty continued fraction")
    if ts[0] < 0 or any(a < 1 for a in ts[1:]):
        raise DomainError("invalid partial quotient")
    return ts


@dataclass(frozen=True)
class ContinuedFraction:
    """[a0; a1, ..., an] with a0 >= 0 and ai >= 1 for i >= 1."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _validated_terms(self.terms))

    @property
    def is_canonical(self) -> bool:
        return len(self.terms) == 1 or self.terms[-1] >= 2

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __str__(self) -> str:
        if len(self.terms) == 1:
            return f"[{self.terms[0]}]"
        rest = ", ".join(str(a) for a in self.terms[1:])
        return f"[{self.terms[0]}; {rest}]"


@dataclass(frozen=True)
class Convergent:
    """Value of the length-(index+1) prefix, in lowest terms."""

    index: int
    value: Rational


CFLike = Union[ContinuedFraction, Iterable[int]]


def _terms_of(cf: CFLike) -> tuple[int, ...]:
    if isinstance(cf, ContinuedFraction):
        return cf.terms
    return _validated_terms(cf)


def from_rational(x: Rational) -> ContinuedFraction:
    """Euclidean quotient expansion of x >= 0; the result is canonical.

    The quotient loop is the Euclidean gcd algorithm read off by its
    quotients, so it terminates for every rational and never emits a
    trailing 1 when the expansion has more than one term.
    """
    if x < 0:
        raise DomainError("negative input")
    num, den = x.numerator, x.denominator
    terms = []
    while True:
        a, rem = divmod(num, den)
        terms.append(a)
        if rem == 0:
            break
        num, den = den, rem
    return ContinuedFraction(tuple(terms))


def to_rational(cf: CFLike) -> Rational:
    """Exact value, folding back to front: rest -> a + 1/rest."""
    terms = _terms_of(cf)
    # the (num, den) pair is the exact rational value of the suffix
    num, den = terms[-1], 1
    for a in reversed(terms[:-1]):
        num, den = a * num + den, num
    return Fraction(num, den)


def canonicalize(terms: CFLike) -> ContinuedFraction:
    """Merge a trailing 1 into its predecessor; the value is unchanged."""
    ts = _terms_of(terms)
    if len(ts) >= 2 and ts[-1] == 1:
        ts = ts[:-2] + (ts[-2] + 1,)
    return ContinuedFraction(ts)


def convergents(source, count: int) -> list[Convergent]:
    """First `count` truncation values h_k/k_k of a CF or quotient stream.

    Uses the standard recurrence h_k = a_k*h_{k-1} + h_{k-2} (same for
    k_k); consecutive values are automatically coprime.
    """
    if count < 1:
        raise RangeError("count must be >= 1")
    if isinstance(source, ContinuedFraction):
        if count > len(source.terms):
            raise RangeError(
                f"count {count} exceeds the {len(source.terms)} available terms"
            )
        it = iter(source.terms)
    else:
        it = iter(source)
    out: list[Convergent] = []
    h1, h2 = 1, 0  # h_{k-1}, h_{k-2}
    k1, k2 = 0, 1
    for index in range(count):
        try:
            a = int(next(it))
        except StopIteration:
            raise RangeError(f"count {count} exceeds the available terms") from None
        h1, h2 = a * h1 + h2, h1
        k1, k2 = a * k1 + k2, k1
        out.append(Convergent(index, Fraction(h1, k1)))
    return out


def from_real_approx(x, eps) -> ContinuedFraction:
    """Floor-and-reciprocal extraction of a CF from a real-valued input.

    The input is converted once to the exact rational value of the
    machine number; the loop then runs entirely in exact arithmetic,
    appending one partial quotient at a time and re-evaluating the
    accumulated fraction until it is within eps of that exact value.
    The result is canonicalized (the value is unchanged by that).
    """
    tolerance = Fraction(eps)
    if tolerance <= 0:
        raise DomainError("eps must be positive")
    target = Fraction(x)
    if target <= 0:
        raise DomainError("positive input required")
    terms: list[int] = []
    t = target
    h1, h2, k1, k2 = 1, 0, 0, 1
    while True:
        a = t.numerator // t.denominator
        terms.append(a)
        h1, h2 = a * h1 + h2, h1
        k1, k2 = a * k1 + k2, k1
        if abs(target - Fraction(h1, k1)) <= tolerance:
            break
        frac = t - a
        if frac == 0:
            # exact hit; the eps test above already fired, kept as a guard
            break
        t = 1 / frac
    return canonicalize(terms)


def fractional_digit_budget(cf: CFLike) -> int:
    """Total decimal digits across a_1..a_n, with a_0 excluded."""
    terms = _terms_of(cf)
    return sum(len(str(a)) for a in terms[1:])


@dataclass(frozen=True)
class ApproximationComparison:
    """Exact absolute errors of two approximations to the same target."""

    cf_error: Rational
    decimal_error: Rational
    closer: str  # "cf", "decimal" or "tie"


def approximation_compare(
    target: Rational, cf_approx: Rational, decimal_approx: Rational
) -> ApproximationComparison:
    """Which of the two approximations sits closer to the target."""
    cf_error = abs(target - cf_approx)
    decimal_error = abs(target - decimal_approx)
    if cf_error < decimal_error:
        closer = "cf"
    elif decimal_error < cf_error:
        closer = "decimal"
    else:
        closer = "tie"
    return ApproximationComparison(cf_error, decimal_error, closer)


def to_plain_string(cf: CFLike) -> str:
    """Space-separated partial quotients, e.g. "0 1 6"."""
    return " ".join(str(a) for a in _terms_of(cf))


def parse_cf(text: str) -> ContinuedFraction:
    """Parse "[a0; a1, a2, ...]" or the space-separated "a0 a1 a2"."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise DomainError(f"invalid continued fraction literal: {text!r}")
        body = s[1:-1].strip()
        if ";" in body:
            head, _, tail = body.partition(";")
            parts = [head] + tail.split(",")
        else:
            parts = [body]
    else:
        parts = s.split()
    parts = [p.strip() for p in parts if p.strip()]
    if not parts:
        raise DomainError(f"invalid continued fraction literal: {text!r}")
    try:
        terms = tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"invalid continued fraction literal: {text!r}") from None
    return ContinuedFraction(terms)
