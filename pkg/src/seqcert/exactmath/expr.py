"""Exact parser for rational-function expressions in the variable ``n``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' unary)?          # right associative, integer exponent
    atom   := INTEGER | 'n' | '(' expr ')'

``**`` is accepted as a synonym for ``^``.  Juxtaposition is not
multiplication: write ``232*n``, not ``232n``.
"""

from __future__ import annotations

import re

from ..errors import DivisionByZeroFunction, ExpressionSyntaxError
from .ratfunc import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastindex)
        num, op, name = m.groups()
        if num is not None:
            tokens.append(("int", num, start))
        elif op is not None:
            tokens.append(("op", "^" if op == "**" else op, start))
        else:
            if name != "n":
                raise ExpressionSyntaxError(f"unknown identifier {name!r} (only 'n' is allowed)", text, start)
            tokens.append(("var", name, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ExpressionSyntaxError(msg, self.text, tok[2])

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except DivisionByZeroFunction:
                    self.error("division by zero", tok)
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            tok = self.take()
            exponent = self.unary()
            if not exponent.is_polynomial() or exponent.num.degree > 0:
                self.error("exponent must be an integer constant", tok)
            e = exponent.num[0]
            if e.denominator != 1:
                self.error("exponent must be an integer", tok)
            try:
                return base ** e.numerator
            except DivisionByZeroFunction:
                self.error("zero raised to a negative power", tok)
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return RationalFunction.constant(int(val))
        if kind == "var":
            return RationalFunction.variable()
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.error("expected ')'")
            self.take()
            return inner
        if kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {val!r}", tok)


def parse_expr(text: str) -> RationalFunction:
    """Parse ``text`` into an exact ``RationalFunction`` of ``n``."""
    return _Parser(text).parse()
