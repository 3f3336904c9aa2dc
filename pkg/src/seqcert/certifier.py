"""Mechanical certification of strict 2-log-convexity (Chen-Xia criterion).

The criterion applies to a positive log-convex sequence with
``z[n] = a(n) z[n-1] + b(n) z[n-2]``.  From ``a`` and ``b`` it builds
four coefficient functions ``c0 .. c3`` and ``Delta = 4 c2^2 - 12 c1 c3``.
If ``c3 < 0`` and ``Delta >= 0`` on a ray ``n >= N``, and ratio bounds
``f[n] <= z[n]/z[n-1] <= g[n]`` satisfy

* ``f >= (-2 c2 - sqrt(Delta)) / (6 c3)``, and
* ``c3 g^3 + c2 g^2 + c1 g + c0 >= 0``,

then ``L(z)`` is log-convex from ``N`` on.  The square root is avoided
with ``delta = -6 c3 f - 2 c2``: given ``c3 < 0`` and ``Delta >= 0`` the
first condition is equivalent to ``delta >= 0`` and ``delta^2 >= Delta``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BaseCaseFails,
    BoundNotPositive,
    CertificationError,
    PoleOnRay,
    PrefixTooShort,
    StepSignUnknown,
    WrongCoefficientSign,
)
from .exactmath import (
    Polynomial,
    RationalFunction,
    SignKind,
    SignVerdict,
    integer_roots,
    sign_on_ray,
    smallest_ray_start,
)
from .sequences import Recurrence, TermTable, check_log_behavior, generate_terms


# -- normalization -------------------------------------------------------


@dataclass(frozen=True)
class NormalizedRecurrence:
    """``z[n] = a(n) z[n-1] + b(n) z[n-2]`` for ``n >= valid_from``.

    ``index_offset`` is the shift between the user's recurrence index
    and the criterion's: criterion ``n`` equals user ``n + index_offset``.
    """

    a: RationalFunction
    b: RationalFunction
    index_offset: int
    valid_from: int


def normalize(rec: Recurrence) -> NormalizedRecurrence:
    zeros = integer_roots(rec.p2, rec.start_index)
    if zeros:
        raise PoleOnRay(zeros[0], "leading coefficient p2")
    p2 = rec.p2.shift(-1)
    a = RationalFunction(rec.p1.shift(-1), p2)
    b = RationalFunction(rec.p0.shift(-1), p2)
    return NormalizedRecurrence(a, b, 1, rec.start_index + 1)


# -- the criterion's coefficient functions ---------------------------------


@dataclass(frozen=True)
class ChenXiaCoefficients:
    c0: RationalFunction
    c1: RationalFunction
    c2: RationalFunction
    c3: RationalFunction
    Delta: RationalFunction


def chenxia_formulas(a1, a2, a3, b1, b2, b3):
    """The four coefficients from ``a(n+j)``, ``b(n+j)``, j = 1, 2, 3.

    Works for any field elements (``Fraction`` or ``RationalFunction``).
    """
    c0 = -(b1 ** 2) * (a2 ** 2 + b1 - a2 * a3 - b3)
    c1 = b1 * (
        2 * a2 * b1 + 2 * a3 * a2 * a1 + a3 * b2 + 2 * a1 * b3
        - 2 * a2 ** 2 * a1 - 2 * a2 * b2 - 3 * a1 * b1
    )
    c2 = (
        4 * a1 * a2 * b1 + 2 * b1 * b2 + a1 ** 2 * a2 * a3 + a1 * a3 * b2 + a1 ** 2 * b3
        - 3 * a1 ** 2 * b1 - a3 * a2 * b1 - a2 ** 2 * a1 ** 2 - b3 * b1
        - 2 * a2 * a1 * b2 - b2 ** 2
    )
    c3 = (
        2 * a1 ** 2 * a2 + 2 * a1 * b2 - a1 * b3 - a1 ** 3
        - a1 * a2 * a3 - a3 * b2
    )
    return c0, c1, c2, c3


def chenxia_coefficients(nr: NormalizedRecurrence) -> ChenXiaCoefficients:
    a, b = nr.a, nr.b
    c0, c1, c2, c3 = chenxia_formulas(a.shift(1), a.shift(2), a.shift(3), b.shift(1), b.shift(2), b.shift(3))
    return ChenXiaCoefficients(c0, c1, c2, c3, 4 * c2 ** 2 - 12 * c1 * c3)


class Direction(str, enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class RatioBound:
    expr: RationalFunction
    direction: Direction
    valid_from: int

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))


def delta_margin(c2: RationalFunction, c3: RationalFunction, f: RatioBound) -> RationalFunction:
    if f.direction is not Direction.LOWER:
        raise ValueError("delta_margin needs a lower ratio bound")
    return -6 * c3 * f.expr - 2 * c2


def cubic_at_bound(coeffs: ChenXiaCoefficients, g: RatioBound) -> RationalFunction:
    if g.direction is not Direction.UPPER:
        raise ValueError("cubic_at_bound needs an upper ratio bound")
    x = g.expr
    return ((coeffs.c3 * x + coeffs.c2) * x + coeffs.c1) * x + coeffs.c0


# -- inductive ratio bounds ----------------------------------------------------


@dataclass(frozen=True)
class BaseCheck:
    index: int
    ratio: Fraction
    bound_value: Fraction


@dataclass(frozen=True)
class BoundCertificate:
    """Induction record for ``f(n) < z[n]/z[n-1]`` or ``z[n]/z[n-1] <= g(n)``.

    Base cases cover ``[bound.valid_from, induction_from]``; the step
    ``k -> k+1`` is certified for every ``k >= step_start`` and used
    for ``k >= induction_from``.
    """

    bound: RatioBound
    variant: str  # "b<=0" or "b>=0"
    positivity: SignVerdict
    b_sign: SignVerdict
    intermediate: RationalFunction
    step_gap: RationalFunction
    step_start: int
    step_verdict: SignVerdict
    induction_from: int
    base_checks: tuple[BaseCheck, ...]

    @property
    def base_ray(self) -> tuple[int, int]:
        return self.bound.valid_from, self.induction_from


def _step_functions(nr: NormalizedRecurrence, bound: RatioBound, variant: str):
    k = bound.expr
    a_next, b_next = nr.a.shift(1), nr.b.shift(1)
    if variant == "b>=0":
        # z[k+1]/z[k] >= a(k+1) for positive terms
        inter = a_next
    else:
        inter = a_next + b_next / k
    if bound.direction is Direction.LOWER:
        gap = inter - k.shift(1)
    else:
        gap = k.shift(1) - inter
    return inter, gap


def certify_ratio_bound(rec: Recurrence, bound: RatioBound, base_up_to: int | None = None) -> BoundCertificate:
    """Prove a ratio bound by induction on the recurrence.

    The step writes ``z[k+1]/z[k] = a(k+1) + b(k+1) z[k-1]/z[k]`` and
    replaces the last quotient through the bound at ``k``, which is
    monotone in the right direction when ``b <= 0``.  For ``b >= 0``
    only lower bounds are supported, via ``z[k+1]/z[k] >= a(k+1)``.
    """
    nr = normalize(rec)
    floor = rec.start_index
    if bound.valid_from < floor:
        raise CertificationError(f"bound must start at n >= {floor} (first index with a predecessor)")
    base_up_to = bound.valid_from if base_up_to is None else base_up_to

    positive_from = smallest_ray_start(bound.expr, bound.valid_from, SignKind.POSITIVE)
    if positive_from != bound.valid_from:
        raise BoundNotPositive(f"bound {bound.expr} is not positive for all n >= {bound.valid_from}")
    positivity = sign_on_ray(bound.expr, bound.valid_from)

    def check_bases(lo: int, hi: int) -> list[BaseCheck]:
        terms = generate_terms(rec, max(hi, rec.start_index))
        out = []
        for n in range(lo, hi + 1):
            prev, cur = terms[n - 1], terms[n]
            if prev <= 0 or cur <= 0:
                raise CertificationError(f"ratio bounds need positive terms; z[{n - 1}], z[{n}] = {prev}, {cur}")
            ratio = cur / prev
            value = bound.expr.eval_int(n)
            ok = ratio > value if bound.direction is Direction.LOWER else ratio <= value
            if not ok:
                raise BaseCaseFails(n, ratio, value, bound.direction.value)
            out.append(BaseCheck(n, ratio, value))
        return out

    # stated base cases first: a false bound is reported as such
    checks = check_bases(bound.valid_from, base_up_to)

    b_nonpos = smallest_ray_start(nr.b, floor + 1, SignKind.NONPOSITIVE)
    b_nonneg = smallest_ray_start(nr.b, floor + 1, SignKind.NONNEGATIVE)
    if b_nonpos is not None:
        variant, b_from = "b<=0", b_nonpos
    elif b_nonneg is not None and bound.direction is Direction.LOWER:
        variant, b_from = "b>=0", b_nonneg
    else:
        raise WrongCoefficientSign(
            f"b(n) = {nr.b} has no eventual sign that supports a {bound.direction.value} bound induction"
        )

    inter, gap = _step_functions(nr, bound, variant)
    step_start = smallest_ray_start(gap, floor, SignKind.POSITIVE)
    if step_start is None:
        raise StepSignUnknown(f"induction gap {gap} is not eventually positive")
    induction_from = max(step_start, b_from - 1, bound.valid_from, base_up_to)
    # extra base cases when the step or the sign of b only kicks in later
    checks += check_bases(base_up_to + 1, induction_from)

    return BoundCertificate(
        bound=bound,
        variant=variant,
        positivity=positivity,
        b_sign=sign_on_ray(nr.b, induction_from + 1),
        intermediate=inter,
        step_gap=gap,
        step_start=step_start,
        step_verdict=sign_on_ray(gap, step_start),
        induction_from=induction_from,
        base_checks=tuple(checks),
    )


# -- the composite certificate ------------------------------------------------


class Verdict(str, enum.Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    INAPPLICABLE = "Inapplicable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RayClaim:
    name: str
    required: SignKind
    start: int | None
    verdict: SignVerdict | None

    @property
    def holds(self) -> bool:
        return self.verdict is not None and self.verdict.implies(self.required)


@dataclass(frozen=True)
class PrefixCheck:
    index: int
    lhs: Fraction  # (z[n-1]z[n+1]-z[n]^2)(z[n+1]z[n+3]-z[n+2]^2)
    rhs: Fraction  # (z[n]z[n+2]-z[n+1]^2)^2

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def strict(self) -> bool:
        return self.lhs > self.rhs


@dataclass(frozen=True)
class BoundFailure:
    direction: Direction
    reason: str


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    reason: str
    strict: bool
    n0: int | None
    witnesses: dict = field(default_factory=dict)  # name -> RationalFunction
    rays: tuple[RayClaim, ...] = ()
    prefix_checks: tuple[PrefixCheck, ...] = ()
    bounds: tuple = ()  # BoundCertificate | BoundFailure
    premises: tuple[str, ...] = ()
    refutation: PrefixCheck | None = None


def two_log_convex_gap(t: TermTable, n: int) -> PrefixCheck:
    z = t.__getitem__
    s = lambda m: z(m - 1) * z(m + 1) - z(m) * z(m)  # noqa: E731
    return PrefixCheck(n, s(n) * s(n + 2), s(n + 1) ** 2)


def _ray(name: str, r: RationalFunction, floor: int, required: SignKind) -> RayClaim:
    start = smallest_ray_start(r, floor, required)
    verdict = sign_on_ray(r, start) if start is not None else sign_on_ray(r, floor)
    return RayClaim(name, required, start, verdict)


def certify_two_log_convex(
    rec: Recurrence,
    f: RatioBound,
    g: RatioBound,
    prefix_up_to: int | None = None,
) -> Certificate:
    """Run the full pipeline and return a ``Certificate``.

    ``prefix_up_to`` is the last index ``n`` at which the 2-log-convexity
    inequality is checked on exact terms; it must reach ``N0 + 2``.
    ``None`` picks exactly ``N0 + 2``.
    """
    if f.direction is not Direction.LOWER or g.direction is not Direction.UPPER:
        raise ValueError("f must be a lower bound and g an upper bound")
    nr = normalize(rec)
    co = chenxia_coefficients(nr)
    floor = max(1, rec.start_index)
    witnesses = {"a": nr.a, "b": nr.b, "c0": co.c0, "c1": co.c1, "c2": co.c2, "c3": co.c3, "Delta": co.Delta}

    c3_ray = _ray("c3", co.c3, floor, SignKind.NEGATIVE)
    delta_ray = _ray("Delta", co.Delta, floor, SignKind.NONNEGATIVE)
    if not c3_ray.holds or not delta_ray.holds:
        bad = c3_ray if not c3_ray.holds else delta_ray
        return Certificate(
            Verdict.INAPPLICABLE,
            f"criterion hypothesis fails: {bad.name} is not eventually {bad.required.value}",
            False, None, witnesses, (c3_ray, delta_ray),
        )

    delta = delta_margin(co.c2, co.c3, f)
    delta_gap = delta ** 2 - co.Delta
    cubic = cubic_at_bound(co, g)
    witnesses.update({"delta": delta, "delta^2-Delta": delta_gap, "cubic_at_g": cubic})
    f_floor = max(floor, f.valid_from)
    g_floor = max(floor, g.valid_from)
    rays = (
        c3_ray,
        delta_ray,
        _ray("delta", delta, f_floor, SignKind.NONNEGATIVE),
        _ray("delta^2-Delta", delta_gap, f_floor, SignKind.NONNEGATIVE),
        _ray("cubic_at_g", cubic, g_floor, SignKind.NONNEGATIVE),
    )

    bounds = []
    problems = []
    for bound in (f, g):
        try:
            bc = certify_ratio_bound(rec, bound)
        except CertificationError as exc:
            bounds.append(BoundFailure(bound.direction, str(exc)))
            problems.append(f"{bound.direction.value} bound: {exc}")
        else:
            bounds.append(bc)
            witnesses[f"{bound.direction.value}_step_gap"] = bc.step_gap
            witnesses[f"{bound.direction.value}_intermediate"] = bc.intermediate
    problems += [f"{r.name} is not eventually {r.required.value}" for r in rays if not r.holds]

    n0 = None
    if not problems:
        n0 = max([r.start for r in rays] + [f.valid_from, g.valid_from, floor])
        if prefix_up_to is None:
            prefix_up_to = n0 + 2
        if prefix_up_to < n0 + 2:
            raise PrefixTooShort(n0 + 2, prefix_up_to)
    elif prefix_up_to is None:
        prefix_up_to = floor + 2

    terms = generate_terms(rec, prefix_up_to + 3)
    premises = []
    first = rec.start_index - 1
    bad = terms.first_nonpositive()
    convex = check_log_behavior(terms, "log-convex")
    checks = tuple(two_log_convex_gap(terms, n) for n in range(max(first + 1, 1), prefix_up_to + 1))
    refutation = next((c for c in checks if not c.holds), None)
    premises.append(f"positive terms: verified for n in [{first}, {terms.last}]")
    premises.append(
        f"log-convexity: verified exactly for n in [{first + 1}, {terms.last - 1}]; assumed beyond"
    )

    common = dict(witnesses=witnesses, rays=rays, prefix_checks=checks, bounds=tuple(bounds))
    if bad is not None:
        return Certificate(Verdict.INAPPLICABLE, f"term z[{bad}] = {terms[bad]} is not positive",
                           False, n0, premises=tuple(premises), **common)
    if not convex.holds:
        v = convex.first_violation
        return Certificate(Verdict.INAPPLICABLE, f"sequence is not log-convex at n = {v.index}",
                           False, n0, premises=tuple(premises), **common)
    if refutation is not None:
        return Certificate(Verdict.REFUTED, f"2-log-convexity fails at n = {refutation.index}",
                           False, n0, premises=tuple(premises), refutation=refutation, **common)
    if problems:
        return Certificate(Verdict.UNKNOWN, "; ".join(problems), False, n0,
                           premises=tuple(premises), **common)
    strict = c3_ray.verdict.strict and all(c.strict for c in checks)
    return Certificate(Verdict.CERTIFIED, f"strictly 2-log-convex for n >= {first + 1}" if strict
                       else f"2-log-convex (non-strict) for n >= {first + 1}",
                       strict, n0, premises=tuple(premises), **common)
