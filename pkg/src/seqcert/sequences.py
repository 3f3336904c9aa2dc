"""Three-term recurrences, exact term tables and log-behavior checks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import LeadingCoefficientZero, NonPositiveTerm, TooFewTerms
from .exactmath import Polynomial, integer_roots


@dataclass(frozen=True)
class Recurrence:
    """``p2(n) z[n+1] = p1(n) z[n] + p0(n) z[n-1]`` for ``n >= start_index``.

    ``initial_values`` are ``z[start_index - 1]`` and ``z[start_index]``.
    """

    p2: Polynomial
    p1: Polynomial
    p0: Polynomial
    start_index: int
    initial_values: tuple[Fraction, Fraction]

    def __post_init__(self):
        if self.p2.is_zero():
            raise ValueError("p2 must not be the zero polynomial")
        if len(self.initial_values) != 2:
            raise ValueError("a three-term recurrence needs exactly two initial values")
        object.__setattr__(self, "initial_values", tuple(Fraction(v) for v in self.initial_values))

    def leading_zeros(self, upto: int | None = None) -> list[int]:
        """Integers ``n >= start_index`` (and ``<= upto``) where ``p2(n) == 0``."""
        roots = integer_roots(self.p2, self.start_index)
        return [r for r in roots if upto is None or r <= upto]


def clf_recurrence() -> Recurrence:
    """The Catalan-Larcombe-French recurrence.

    ``(n+1)^2 P[n+1] = 8(3n^2+3n+1) P[n] - 128 n^2 P[n-1]`` with ``P0 = 1``, ``P1 = 8``.
    """
    return Recurrence(
        p2=Polynomial([1, 2, 1]),
        p1=Polynomial([8, 24, 24]),
        p0=Polynomial([0, 0, -128]),
        start_index=1,
        initial_values=(Fraction(1), Fraction(8)),
    )


@dataclass(frozen=True)
class TermTable:
    origin: int
    values: tuple[Fraction, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        i = n - self.origin
        if not 0 <= i < len(self.values):
            raise IndexError(f"index {n} outside table [{self.origin}, {self.last}]")
        return self.values[i]

    @property
    def last(self) -> int:
        return self.origin + len(self.values) - 1

    def indices(self) -> range:
        return range(self.origin, self.last + 1)

    def items(self):
        return zip(self.indices(), self.values)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def first_nonpositive(self) -> int | None:
        return next((n for n, v in self.items() if v <= 0), None)

    @classmethod
    def of(cls, values, origin: int = 0) -> "TermTable":
        return cls(origin, tuple(Fraction(v) for v in values))


def generate_terms(rec: Recurrence, n_max: int, *, assert_integral: bool = False) -> TermTable:
    """Exact terms ``z[start_index - 1] .. z[n_max]``."""
    s = rec.start_index
    if n_max < s:
        raise ValueError(f"n_max={n_max} is below start_index={s}")
    zeros = rec.leading_zeros(n_max - 1)
    if zeros:
        raise LeadingCoefficientZero(zeros[0])
    p2 = rec.p2.coeffs
    p1 = rec.p1.coeffs
    p0 = rec.p0.coeffs
    prev, cur = rec.initial_values
    values = [prev, cur]
    # Horner inline: this loop dominates for long tables.
    for n in range(s, n_max):
        a = b = c = Fraction(0)
        for x in reversed(p2):
            a = a * n + x
        for x in reversed(p1):
            b = b * n + x
        for x in reversed(p0):
            c = c * n + x
        nxt = (b * cur + c * prev) / a
        values.append(nxt)
        prev, cur = cur, nxt
    table = TermTable(s - 1, tuple(values))
    if assert_integral and not table.is_integral():
        bad = next(n for n, v in table.items() if v.denominator != 1)
        raise ArithmeticError(f"term {bad} is not an integer: {table[bad]}")
    return table


def _binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def clf_closed_form(n: int) -> int:
    """``P[n] = 2^n sum_k (-4)^k C(n-k, k) C(2n-2k, n-k)^2``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = sum((-4) ** k * _binom(n - k, k) * _binom(2 * n - 2 * k, n - k) ** 2 for k in range(n + 1))
    return 2 ** n * total


def l_transform(t: TermTable) -> TermTable:
    """``s[n] = z[n-1] z[n+1] - z[n]^2``, indexed from ``origin + 1``."""
    if len(t) < 3:
        raise TooFewTerms(f"the L operator needs at least 3 terms, got {len(t)}")
    v = t.values
    out = tuple(v[i - 1] * v[i + 1] - v[i] * v[i] for i in range(1, len(v) - 1))
    return TermTable(t.origin + 1, out)


class LogProperty(str, enum.Enum):
    LOG_CONCAVE = "log-concave"
    LOG_CONVEX = "log-convex"
    LOG_BALANCED = "log-balanced"
    K_LOG_CONVEX = "k-log-convex"
    QUOTIENT_LOG_CONCAVE = "quotient-log-concave"


@dataclass(frozen=True)
class Violation:
    index: int
    lhs: Fraction
    rhs: Fraction
    relation: str  # the relation that was required, e.g. "<="
    stage: int | None = None  # L-iterate for k-log-convexity
    clause: str = ""  # which half of a compound property failed


@dataclass(frozen=True)
class BehaviorVerdict:
    property: LogProperty
    strict: bool
    holds: bool
    first_violation: Violation | None = None
    k: int | None = None
    checked_range: tuple[int, int] | None = None

    def __post_init__(self):
        if not self.holds and self.first_violation is None:
            raise ValueError("a failing verdict must carry its first violation")


def _compare(lhs, rhs, relation: str) -> bool:
    return {"<": lhs < rhs, "<=": lhs <= rhs, ">": lhs > rhs, ">=": lhs >= rhs}[relation]


def _first_violation(pairs, relation: str, clause: str = "", stage=None) -> Violation | None:
    for n, lhs, rhs in pairs:
        if not _compare(lhs, rhs, relation):
            return Violation(n, lhs, rhs, relation, stage, clause)
    return None


def _convex_pairs(t: TermTable):
    v = t.values
    for i in range(1, len(v) - 1):
        yield t.origin + i, v[i] * v[i], v[i - 1] * v[i + 1]


def _concave_pairs(t: TermTable):
    # z[n]^2 against z[n-1] z[n+1]
    yield from _convex_pairs(t)


def _balanced_pairs(t: TermTable):
    # (n+1) z[n]^2 >= n z[n+1] z[n-1] is log-concavity of z[n]/n!
    v = t.values
    for i in range(1, len(v) - 1):
        n = t.origin + i
        yield n, (n + 1) * v[i] * v[i], n * v[i + 1] * v[i - 1]


def _quotient_pairs(t: TermTable):
    # P[n-2] P[n]^3 >= P[n+1] P[n-1]^3
    v = t.values
    for i in range(2, len(v) - 1):
        yield t.origin + i, v[i - 2] * v[i] ** 3, v[i + 1] * v[i - 1] ** 3


def _require_positive(t: TermTable) -> None:
    bad = t.first_nonpositive()
    if bad is not None:
        raise NonPositiveTerm(bad, t[bad])


def check_log_behavior(t: TermTable, prop: LogProperty | str, strict: bool = False, k: int | None = None) -> BehaviorVerdict:
    """Test a log-behavior property exactly over every index of ``t``.

    Inequalities are checked at each interior index ``n`` (where both
    neighbours are in the table).  The first failing index is
    reported together with the two exact sides.
    """
    prop = LogProperty(prop)
    le, ge = ("<", ">") if strict else ("<=", ">=")
    span = (t.origin + 1, t.last - 1)

    if prop is LogProperty.K_LOG_CONVEX:
        if k is None or k < 1:
            raise ValueError("k-log-convexity needs k >= 1")
        if len(t) < 2 * k + 1:
            raise TooFewTerms(f"{k}-log-convexity needs at least {2 * k + 1} terms, got {len(t)}")
        stage = t
        for j in range(k):
            if j:
                stage = l_transform(stage)
            bad = _first_violation(_convex_pairs(stage), le, stage=j)
            if bad is not None:
                return BehaviorVerdict(prop, strict, False, bad, k, span)
        return BehaviorVerdict(prop, strict, True, None, k, span)

    if len(t) < 3:
        raise TooFewTerms(f"{prop.value} needs at least 3 terms, got {len(t)}")

    if prop is LogProperty.LOG_CONVEX:
        bad = _first_violation(_convex_pairs(t), le)
    elif prop is LogProperty.LOG_CONCAVE:
        bad = _first_violation(_concave_pairs(t), ge)
    elif prop is LogProperty.LOG_BALANCED:
        _require_positive(t)
        if t.origin < 0:
            raise ValueError("log-balancedness divides by n!, so the table must start at n >= 0")
        bad = _first_violation(_convex_pairs(t), le, clause="log-convex")
        if bad is None:
            bad = _first_violation(_balanced_pairs(t), ge, clause="z/n! log-concave")
    else:
        if len(t) < 4:
            raise TooFewTerms(f"quotient log-concavity needs at least 4 terms, got {len(t)}")
        _require_positive(t)
        span = (t.origin + 2, t.last - 1)
        bad = _first_violation(_quotient_pairs(t), ge)
    return BehaviorVerdict(prop, strict, bad is None, bad, None, span)


def quotients(t: TermTable) -> TermTable:
    """``z[n] / z[n-1]`` indexed from ``origin + 1``."""
    v = t.values
    return TermTable(t.origin + 1, tuple(v[i] / v[i - 1] for i in range(1, len(v))))
