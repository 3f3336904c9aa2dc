"""Rational functions in one variable over the rationals, kept reduced."""

from __future__ import annotations

import os
from fractions import Fraction
from numbers import Rational

from ..errors import DegreeLimitExceeded, DivisionByZeroFunction, PoleError
from .polynomial import Polynomial, _frac, poly_gcd

DEFAULT_MAX_DEGREE = 64


def max_degree() -> int:
    """Symbolic degree cap, read from SEQCERT_MAX_DEGREE on every call."""
    raw = os.environ.get("SEQCERT_MAX_DEGREE")
    return int(raw) if raw else DEFAULT_MAX_DEGREE


class RationalFunction:
    """Immutable reduced quotient ``num / den``.

    Canonical form: ``gcd(num, den) == 1`` and ``den`` is monic, so
    two equal functions always have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Polynomial.constant(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise DivisionByZeroFunction("zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial.constant(1)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.lc
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        _check_degree(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        # caller guarantees canonical form
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._trusted(Polynomial.constant(c), Polynomial.constant(1))

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls._trusted(Polynomial.x(), Polynomial.constant(1))

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational, Polynomial)):
            return self == _as_rf(other)
        return NotImplemented

    def __hash__(self):
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.degree > 0:
            s_co = o.den.exact_div(g)
            o_co = self.den.exact_div(g)
            return RationalFunction(self.num * s_co + o.num * o_co, self.den * s_co)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._trusted(-self.num, self.den)

    def __sub__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalFunction.constant(0)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num.exact_div(g1), o.den.exact_div(g1)
        n2, d1 = o.num.exact_div(g2), self.den.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lead = den.lc
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        _check_degree(num, den)
        return RationalFunction._trusted(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZeroFunction("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZeroFunction("division by the zero function")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer exponent expected")
        if k < 0:
            return self.inverse() ** (-k)
        # reduced p/q has reduced powers p^k/q^k
        num, den = self.num ** k, self.den ** k
        _check_degree(num, den)
        return RationalFunction._trusted(num, den)

    def shift(self, c) -> "RationalFunction":
        """Substitute n -> n + c."""
        return RationalFunction._trusted(self.num.shift(c), self.den.shift(c))

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        d = self.den(x)
        if not d:
            raise PoleError(x)
        return self.num(x) / d

    def eval_int(self, n: int) -> Fraction:
        d = self.den.eval_int(n)
        if not d:
            raise PoleError(n)
        return self.num.eval_int(n) / d

    def content_form(self) -> tuple[Fraction, Polynomial, Polynomial]:
        """Split into ``c * P / Q`` with P, Q primitive integer polynomials, lc(Q) > 0."""
        if self.is_zero():
            return Fraction(0), Polynomial(), Polynomial.constant(1)
        pn, pd = self.num.primitive(), self.den.primitive()
        c = self.num.lc / pn.lc * (pd.lc / self.den.lc)
        return c, pn, pd

    # -- rendering -----------------------------------------------------

    def to_str(self, var: str = "n") -> str:
        if self.is_polynomial():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RationalFunction({self.to_str()!r})"


def _check_degree(num: Polynomial, den: Polynomial) -> None:
    limit = max_degree()
    if num.degree > limit or den.degree > limit:
        raise DegreeLimitExceeded(
            f"degree {max(num.degree, den.degree)} exceeds SEQCERT_MAX_DEGREE={limit}"
        )


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Rational)):
        return Polynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def _as_rf(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction._trusted(x, Polynomial.constant(1))
    if isinstance(x, (int, Rational)):
        return RationalFunction.constant(x)
    return None
