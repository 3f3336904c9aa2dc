"""Sound sign determination of rational functions on integer rays ``n >= N``.

Two decision paths are available.  The shift test substitutes
``n = N + x`` and checks that numerator and denominator each have
coefficients of a single sign, which settles the sign for every real
``x >= 0``.  The Sturm path isolates all real roots of
``num * den`` to the right of ``N``; between isolating intervals the
sign is constant, and integers inside an interval are evaluated
exactly.  The Sturm path is complete, so ``auto`` never returns
``UNKNOWN``; a sign claim is never produced from sampling alone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import PoleOnRay
from .polynomial import Polynomial, squarefree_part
from .ratfunc import RationalFunction


class SignKind(str, enum.Enum):
    POSITIVE = "Positive"
    NONNEGATIVE = "Nonnegative"
    ZERO = "Zero"
    NONPOSITIVE = "Nonpositive"
    NEGATIVE = "Negative"
    MIXED = "Mixed"
    UNKNOWN = "Unknown"


# which verdicts entail which weaker claims
_IMPLIES = {
    SignKind.POSITIVE: {SignKind.POSITIVE, SignKind.NONNEGATIVE},
    SignKind.NEGATIVE: {SignKind.NEGATIVE, SignKind.NONPOSITIVE},
    SignKind.NONNEGATIVE: {SignKind.NONNEGATIVE},
    SignKind.NONPOSITIVE: {SignKind.NONPOSITIVE},
    SignKind.ZERO: {SignKind.ZERO, SignKind.NONNEGATIVE, SignKind.NONPOSITIVE},
    SignKind.MIXED: {SignKind.MIXED},
    SignKind.UNKNOWN: set(),
}


@dataclass(frozen=True)
class SignVerdict:
    kind: SignKind
    ray_start: int
    witnesses: tuple[tuple[int, Fraction], ...] = ()
    method: str = ""

    def __post_init__(self):
        if self.kind is SignKind.MIXED:
            vals = [v for _, v in self.witnesses]
            if not (any(v > 0 for v in vals) and any(v < 0 for v in vals)):
                raise ValueError("Mixed verdict needs a positive and a negative witness")

    def implies(self, kind: SignKind | str) -> bool:
        return SignKind(kind) in _IMPLIES[self.kind]

    @property
    def strict(self) -> bool:
        return self.kind in (SignKind.POSITIVE, SignKind.NEGATIVE)


@dataclass(frozen=True)
class _Segment:
    lo: int
    hi: int | None  # None = unbounded
    sign: int | None  # None marks a pole
    witness: tuple[int, Fraction | None] = field(default=(0, None))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        # positive rescaling keeps signs and tames coefficient growth
        seq.append((-r).scale(1 / r.content()))
    return [s for s in seq if not s.is_zero()]


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _var_at(seq: list[Polynomial], x: Fraction) -> int:
    return _variations(_sgn(s(x)) for s in seq)


def _var_at_inf(seq: list[Polynomial]) -> int:
    return _variations(_sgn(s.lc) for s in seq)


def cauchy_bound(p: Polynomial) -> int:
    """Integer strictly above every real root of ``p``."""
    lead = abs(p.lc)
    m = max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    return math.floor(1 + m) + 1


def isolate_roots(p: Polynomial, lo: Fraction, width=Fraction(1, 2)) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(a, b]`` each holding exactly one root of ``p`` in ``(lo, inf)``.

    ``p`` must be squarefree and nonconstant.  Intervals are refined
    to width at most ``width`` and returned sorted.
    """
    seq = sturm_sequence(p)
    hi = Fraction(max(cauchy_bound(p), math.floor(lo) + 1))
    v_lo = _var_at(seq, lo)
    v_hi = _var_at(seq, hi)
    out = []
    stack = [(lo, hi, v_lo, v_hi)]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1 and b - a <= width:
            out.append((a, b))
            continue
        m = (a + b) / 2
        vm = _var_at(seq, m)
        stack.append((m, b, vm, vb))
        stack.append((a, m, va, vm))
    out.sort()
    return out


def _integer_profile(num: Polynomial, den: Polynomial, start: int) -> list[_Segment]:
    """Partition integers ``>= start`` into runs of constant sign of ``num/den``."""

    def point(n: int) -> _Segment:
        d = den.eval_int(n)
        if not d:
            return _Segment(n, n, None, (n, None))
        v = num.eval_int(n) / d
        return _Segment(n, n, _sgn(v), (n, v))

    h = num * den
    if h.degree <= 0:
        seg = point(start)
        return [_Segment(start, None, seg.sign, seg.witness)]

    # start the isolation just left of ``start`` so a root exactly there is caught
    roots = isolate_roots(squarefree_part(h), Fraction(2 * start - 1, 2))
    segments: list[_Segment] = []
    cursor = start  # smallest integer not yet classified
    for a, b in roots:
        gap_end = math.ceil(a) - 1
        # integers in [cursor, gap_end] avoid every root interval
        if gap_end >= cursor:
            p = point(cursor)
            segments.append(_Segment(cursor, gap_end, p.sign, p.witness))
            cursor = gap_end + 1
        for n in range(max(cursor, math.ceil(a)), math.floor(b) + 1):
            segments.append(point(n))
            cursor = n + 1
        cursor = max(cursor, math.floor(b) + 1)
    p = point(cursor)
    segments.append(_Segment(cursor, None, p.sign, p.witness))
    return _merge(segments)


def _merge(segments: list[_Segment]) -> list[_Segment]:
    out: list[_Segment] = []
    for s in segments:
        if out and out[-1].sign == s.sign and s.sign is not None:
            prev = out[-1]
            out[-1] = _Segment(prev.lo, s.hi, prev.sign, prev.witness)
        else:
            out.append(s)
    return out


def _summarize(signs: set[int]) -> SignKind:
    if signs == {1}:
        return SignKind.POSITIVE
    if signs == {-1}:
        return SignKind.NEGATIVE
    if signs == {0}:
        return SignKind.ZERO
    if signs == {0, 1}:
        return SignKind.NONNEGATIVE
    if signs == {0, -1}:
        return SignKind.NONPOSITIVE
    return SignKind.MIXED


def _shift_test(r: RationalFunction, N: int) -> SignVerdict | None:
    ns, ds = r.num.shift(N), r.den.shift(N)
    if not ds[0]:
        raise PoleOnRay(N)
    dsigns = {_sgn(c) for c in ds.coeffs if c}
    nsigns = {_sgn(c) for c in ns.coeffs if c}
    if len(dsigns) != 1 or len(nsigns) != 1:
        return None
    s = nsigns.pop() * dsigns.pop()
    at_start = r.eval_int(N)
    if ns[0]:
        kind = SignKind.POSITIVE if s > 0 else SignKind.NEGATIVE
    else:
        kind = SignKind.NONNEGATIVE if s > 0 else SignKind.NONPOSITIVE
    witnesses = [(N, at_start)]
    if not ns[0]:
        witnesses.append((N + 1, r.eval_int(N + 1)))
    return SignVerdict(kind, N, tuple(witnesses), "shift")


def _sturm_test(r: RationalFunction, N: int) -> SignVerdict:
    segs = _integer_profile(r.num, r.den, N)
    for s in segs:
        if s.sign is None:
            raise PoleOnRay(s.lo)
    kind = _summarize({s.sign for s in segs})
    witnesses = []
    if kind is SignKind.MIXED:
        pos = next(s for s in segs if s.sign > 0)
        neg = next(s for s in segs if s.sign < 0)
        witnesses = sorted([pos.witness, neg.witness])
    else:
        witnesses = [segs[0].witness]
        zero = next((s for s in segs if s.sign == 0), None)
        if zero is not None and zero.witness not in witnesses:
            witnesses.append(zero.witness)
    return SignVerdict(kind, N, tuple(witnesses), "sturm")


def sign_on_ray(r: RationalFunction, N: int, method: str = "auto") -> SignVerdict:
    """Decide the sign of ``r(n)`` for all integers ``n >= N``.

    ``method`` is ``"auto"`` (shift test, then Sturm), ``"shift"`` or
    ``"sturm"``.  Only ``"shift"`` can return ``UNKNOWN``.

    Raises ``PoleOnRay`` if the denominator vanishes at an integer ``>= N``.
    """
    if method not in ("auto", "shift", "sturm"):
        raise ValueError(f"unknown method {method!r}")
    if r.is_zero():
        return SignVerdict(SignKind.ZERO, N, ((N, Fraction(0)),), "trivial")
    if method in ("auto", "shift"):
        v = _shift_test(r, N)
        if v is not None:
            return v
        if method == "shift":
            # the shift test says nothing about poles further out
            _check_poles(r.den, N)
            return SignVerdict(SignKind.UNKNOWN, N, (), "shift")
    return _sturm_test(r, N)


def _check_poles(den: Polynomial, N: int) -> None:
    roots = integer_roots(den, N)
    if roots:
        raise PoleOnRay(roots[0])


_WANT = {
    SignKind.POSITIVE: {1},
    SignKind.NONNEGATIVE: {0, 1},
    SignKind.NEGATIVE: {-1},
    SignKind.NONPOSITIVE: {0, -1},
}


def smallest_ray_start(r: RationalFunction, floor: int, want: SignKind | str) -> int | None:
    """Smallest ``S >= floor`` such that ``r`` has sign ``want`` at every integer ``n >= S``.

    Poles count as violations.  Returns ``None`` when the sign
    eventually fails for good.
    """
    allowed = _WANT[SignKind(want)]
    if r.is_zero():
        return floor if 0 in allowed else None
    segs = _integer_profile(r.num, r.den, floor)
    start = floor
    for s in segs:
        if s.sign not in allowed:
            if s.hi is None:
                return None
            start = s.hi + 1
    return start


def integer_roots(p: Polynomial, start: int) -> list[int]:
    """All integers ``n >= start`` with ``p(n) == 0`` (``p`` nonzero)."""
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    if p.degree == 0:
        return []
    segs = _integer_profile(p, Polynomial.constant(1), start)
    return [n for s in segs if s.sign == 0 for n in range(s.lo, s.hi + 1)]
