"""Line-oriented sequence specification files (``*.seq``).

Example::

    [sequence]
    name = Catalan-Larcombe-French
    closed_form = clf-binomial-sum

    [recurrence]
    # p2(n) z[n+1] = p1(n) z[n] + p0(n) z[n-1]
    p2 = (n+1)^2
    p1 = 8*(3*n^2+3*n+1)
    p0 = -128*n^2
    start_index = 1
    initial_values = 1, 8

    [bounds]
    lower = 232*n/(15*(n+2))
    lower_valid_from = 1
    upper = 16-16/n-16/n^3
    upper_valid_from = 6
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .certifier import Direction, RatioBound
from .errors import ExpressionSyntaxError, SpecSyntaxError, UnknownKey
from .exactmath import parse_expr
from .sequences import Recurrence

CLOSED_FORMS = ("clf-binomial-sum",)

_KEYS = {
    "sequence": ("name", "closed_form"),
    "recurrence": ("p2", "p1", "p0", "start_index", "initial_values"),
    "bounds": ("lower", "lower_valid_from", "upper", "upper_valid_from"),
}
_REQUIRED = ("p2", "p1", "p0", "start_index", "initial_values")
_RATIONAL = re.compile(r"^\s*-?\d+(?:\s*/\s*\d+)?\s*$")


@dataclass(frozen=True)
class SequenceSpec:
    name: str
    p2: str
    p1: str
    p0: str
    start_index: int
    initial_values: tuple[Fraction, Fraction]
    closed_form: str | None = None
    lower: str | None = None
    lower_valid_from: int | None = None
    upper: str | None = None
    upper_valid_from: int | None = None

    def recurrence(self) -> Recurrence:
        polys = []
        for text in (self.p2, self.p1, self.p0):
            r = parse_expr(text)
            if not r.is_polynomial():
                raise ValueError(f"recurrence coefficient {text!r} is not a polynomial")
            polys.append(r.num.scale(1 / r.den.lc))
        return Recurrence(*polys, self.start_index, self.initial_values)

    def lower_bound(self) -> RatioBound | None:
        if self.lower is None:
            return None
        return RatioBound(parse_expr(self.lower), Direction.LOWER, self.lower_valid_from)

    def upper_bound(self) -> RatioBound | None:
        if self.upper is None:
            return None
        return RatioBound(parse_expr(self.upper), Direction.UPPER, self.upper_valid_from)


def _int(value: str, line: int, col: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise SpecSyntaxError(f"expected an integer, got {value!r}", line, col) from None


def _rational(value: str, line: int, col: int) -> Fraction:
    if not _RATIONAL.match(value):
        raise SpecSyntaxError(f"expected an exact integer or p/q literal, got {value!r}", line, col)
    return Fraction(value.replace(" ", ""))


def parse_spec(text: str) -> SequenceSpec:
    """Parse a spec document; errors carry 1-based line and column."""
    section = None
    found: dict[str, tuple[str, int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(raw) - len(raw.lstrip())
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise SpecSyntaxError("unterminated section header", lineno, indent + 1)
            section = stripped[1:-1].strip()
            if section not in _KEYS:
                raise UnknownKey(f"unknown section [{section}]", lineno, indent + 2)
            continue
        if "=" not in raw:
            raise SpecSyntaxError("expected 'key = value'", lineno, indent + 1)
        if section is None:
            raise SpecSyntaxError("key outside of any section", lineno, indent + 1)
        key_part, value_part = raw.split("=", 1)
        key = key_part.strip()
        if key not in _KEYS[section]:
            raise UnknownKey(f"unknown key {key!r} in [{section}]", lineno, indent + 1)
        if key in found:
            raise SpecSyntaxError(f"duplicate key {key!r}", lineno, indent + 1)
        value = value_part.strip()
        col = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        found[key] = (value, lineno, col)

    missing = [k for k in _REQUIRED if k not in found]
    if missing:
        last = len(text.splitlines()) + 1
        raise SpecSyntaxError(f"missing required key(s): {', '.join(missing)}", last, 1)

    for key in ("p2", "p1", "p0", "lower", "upper"):
        if key in found:
            value, line, col = found[key]
            try:
                r = parse_expr(value)
            except ExpressionSyntaxError as exc:
                raise SpecSyntaxError(str(exc), line, col + exc.pos) from None
            if key in ("p2", "p1", "p0") and not r.is_polynomial():
                raise SpecSyntaxError(f"{key} must be a polynomial in n", line, col)

    value, line, col = found["initial_values"]
    parts = [p for p in value.split(",")]
    if len(parts) != 2 or not all(p.strip() for p in parts):
        raise SpecSyntaxError(f"initial_values needs exactly two values, got {value!r}", line, col)
    inits = tuple(_rational(p, line, col) for p in parts)

    def opt_int(key):
        if key not in found:
            return None
        return _int(*found[key])

    for b in ("lower", "upper"):
        if (b in found) != (f"{b}_valid_from" in found):
            where = found.get(b) or found.get(f"{b}_valid_from")
            raise SpecSyntaxError(f"{b} and {b}_valid_from must be given together", where[1], where[2])

    closed = found.get("closed_form")
    if closed and closed[0] not in CLOSED_FORMS:
        raise SpecSyntaxError(f"unknown closed form {closed[0]!r}", closed[1], closed[2])

    return SequenceSpec(
        name=found["name"][0] if "name" in found else "",
        p2=found["p2"][0],
        p1=found["p1"][0],
        p0=found["p0"][0],
        start_index=_int(*found["start_index"]),
        initial_values=inits,
        closed_form=closed[0] if closed else None,
        lower=found["lower"][0] if "lower" in found else None,
        lower_valid_from=opt_int("lower_valid_from"),
        upper=found["upper"][0] if "upper" in found else None,
        upper_valid_from=opt_int("upper_valid_from"),
    )


def render_spec(spec: SequenceSpec) -> str:
    lines = ["[sequence]", f"name = {spec.name}"]
    if spec.closed_form:
        lines.append(f"closed_form = {spec.closed_form}")
    lines += [
        "",
        "[recurrence]",
        f"p2 = {spec.p2}",
        f"p1 = {spec.p1}",
        f"p0 = {spec.p0}",
        f"start_index = {spec.start_index}",
        f"initial_values = {spec.initial_values[0]}, {spec.initial_values[1]}",
    ]
    if spec.lower is not None or spec.upper is not None:
        lines += ["", "[bounds]"]
        if spec.lower is not None:
            lines += [f"lower = {spec.lower}", f"lower_valid_from = {spec.lower_valid_from}"]
        if spec.upper is not None:
            lines += [f"upper = {spec.upper}", f"upper_valid_from = {spec.upper_valid_from}"]
    return "\n".join(lines) + "\n"
