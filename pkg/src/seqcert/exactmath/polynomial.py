"""Univariate polynomials in ``n`` with exact rational coefficients.

Coefficients are stored low degree first, as a tuple of ``Fraction``.
The zero polynomial is the empty tuple; otherwise the last coefficient
is nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import comb, gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([_frac(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q - self

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if not a or not b:
            return Polynomial._raw(())
        if len(b) == 1:
            c = b[0]
            return Polynomial._raw(tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return Polynomial._raw(tuple(x * c for x in b))
        # Multiply over a common integer denominator; much faster than
        # Fraction products term by term.
        ia, da = _to_integer(a)
        ib, db = _to_integer(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        d = da * db
        return Polynomial._raw(tuple(Fraction(c, d) for c in out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = _frac(c)
        return Polynomial._raw(tuple(x * c for x in self.coeffs)) if c else Polynomial()

    def __divmod__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if q.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = q.degree
        lead = q.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, y in enumerate(q.coeffs):
                    rem[k + j] -= c * y
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- evaluation and transforms --------------------------------------

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_int(self, n: int) -> Fraction:
        """Evaluate at an integer, working over a common denominator."""
        ic, d = _to_integer(self.coeffs)
        acc = 0
        for c in reversed(ic):
            acc = acc * n + c
        return Fraction(acc, d)

    def shift(self, c) -> "Polynomial":
        """Return q with q(x) = p(x + c) (Taylor shift)."""
        c = _frac(c)
        if not c or len(self.coeffs) <= 1:
            return self
        m = len(self.coeffs)
        if c.denominator == 1:
            ic, d = _to_integer(self.coeffs)
            ci = c.numerator
            # q_j = sum_{i>=j} p_i * C(i, j) * c^(i-j)
            powers = [1] * m
            for k in range(1, m):
                powers[k] = powers[k - 1] * ci
            out = [0] * m
            for i, p in enumerate(ic):
                if p:
                    for j in range(i + 1):
                        out[j] += p * comb(i, j) * powers[i - j]
            return Polynomial._raw(_trim([Fraction(v, d) for v in out]))
        # Horner on the shifted variable for rational shifts.
        result = Polynomial()
        lin = Polynomial((c, 1))
        for coef in reversed(self.coeffs):
            result = result * lin + coef
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> Fraction:
        """Positive rational c such that p / c has coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(0)
        ic, d = _to_integer(self.coeffs)
        return Fraction(reduce(gcd, ic, 0), d)

    def primitive(self) -> "Polynomial":
        """Integer polynomial with coprime coefficients and positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(1 / self.lc)

    def integer_coeffs(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is not integral."""
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def sign_changes(self) -> int:
        signs = [c > 0 for c in self.coeffs if c]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    # -- rendering -----------------------------------------------------

    def to_str(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}*{mono}"
                else:
                    body = f"({a})*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _to_integer(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Return (ints, d) with coeffs == [c / d for c in ints]."""
    d = 1
    for c in coeffs:
        if c.denominator != 1:
            d = lcm(d, c.denominator)
    if d == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for j, y in enumerate(b):
            rem[shift + j] -= c * y
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(gcd, a, 0)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both are zero).

    Uses the primitive polynomial remainder sequence on integer
    coefficients, which keeps coefficient growth in check.
    """
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return Polynomial.constant(1)
    a = _int_primitive(_to_integer(p.coeffs)[0])
    b = _int_primitive(_to_integer(q.coeffs)[0])
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, (_int_primitive(r) if r else [])
    return Polynomial(a).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.degree <= 0:
        return p
    return p.exact_div(poly_gcd(p, p.derivative()))
