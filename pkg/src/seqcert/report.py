"""JSON documents for certificates, plus independent re-validation.

Every exact number is written as a string ``"p/q"`` (or ``"p"``), and
every rational function as its numerator and denominator coefficient
lists, lowest degree first.  ``certificate_from_dict`` inverts
``certificate_to_dict`` exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .certifier import (
    BaseCheck,
    BoundCertificate,
    BoundFailure,
    Certificate,
    Direction,
    PrefixCheck,
    RatioBound,
    RayClaim,
    Verdict,
    chenxia_formulas,
    cubic_at_bound,
    delta_margin,
    ChenXiaCoefficients,
    normalize,
    two_log_convex_gap,
)
from .exactmath import Polynomial, RationalFunction, SignKind, SignVerdict, sign_on_ray
from .sequences import Recurrence, generate_terms

FORMAT = "seqcert-certificate/1"


def q(x: Fraction) -> str:
    return str(Fraction(x))


def unq(s) -> Fraction:
    return Fraction(s)


def poly_to_list(p: Polynomial) -> list[str]:
    return [q(c) for c in p.coeffs]


def poly_from_list(xs) -> Polynomial:
    return Polynomial(unq(x) for x in xs)


def rf_to_dict(r: RationalFunction) -> dict:
    return {"numerator": poly_to_list(r.num), "denominator": poly_to_list(r.den)}


def rf_from_dict(d: dict) -> RationalFunction:
    return RationalFunction(poly_from_list(d["numerator"]), poly_from_list(d["denominator"]))


def verdict_to_dict(v: SignVerdict | None) -> dict | None:
    if v is None:
        return None
    return {
        "kind": v.kind.value,
        "rayStart": v.ray_start,
        "method": v.method,
        "witnesses": [[n, q(val)] for n, val in v.witnesses],
    }


def verdict_from_dict(d: dict | None) -> SignVerdict | None:
    if d is None:
        return None
    return SignVerdict(
        SignKind(d["kind"]),
        d["rayStart"],
        tuple((n, unq(v)) for n, v in d["witnesses"]),
        d["method"],
    )


def _bound_to_dict(b: RatioBound) -> dict:
    return {"direction": b.direction.value, "expr": rf_to_dict(b.expr), "validFrom": b.valid_from}


def _bound_from_dict(d: dict) -> RatioBound:
    return RatioBound(rf_from_dict(d["expr"]), Direction(d["direction"]), d["validFrom"])


def _prefix_to_dict(c: PrefixCheck) -> dict:
    return {"n": c.index, "lhs": q(c.lhs), "rhs": q(c.rhs), "holds": c.holds, "strict": c.strict}


def _prefix_from_dict(d: dict) -> PrefixCheck:
    return PrefixCheck(d["n"], unq(d["lhs"]), unq(d["rhs"]))


def bound_certificate_to_dict(bc) -> dict:
    if isinstance(bc, BoundFailure):
        return {"direction": bc.direction.value, "failure": bc.reason}
    return {
        "bound": _bound_to_dict(bc.bound),
        "variant": bc.variant,
        "positivity": verdict_to_dict(bc.positivity),
        "bSign": verdict_to_dict(bc.b_sign),
        "intermediate": rf_to_dict(bc.intermediate),
        "stepGap": rf_to_dict(bc.step_gap),
        "stepStart": bc.step_start,
        "stepVerdict": verdict_to_dict(bc.step_verdict),
        "inductionFrom": bc.induction_from,
        "baseChecks": [{"n": c.index, "ratio": q(c.ratio), "bound": q(c.bound_value)} for c in bc.base_checks],
    }


def bound_certificate_from_dict(d: dict):
    if "failure" in d:
        return BoundFailure(Direction(d["direction"]), d["failure"])
    return BoundCertificate(
        bound=_bound_from_dict(d["bound"]),
        variant=d["variant"],
        positivity=verdict_from_dict(d["positivity"]),
        b_sign=verdict_from_dict(d["bSign"]),
        intermediate=rf_from_dict(d["intermediate"]),
        step_gap=rf_from_dict(d["stepGap"]),
        step_start=d["stepStart"],
        step_verdict=verdict_from_dict(d["stepVerdict"]),
        induction_from=d["inductionFrom"],
        base_checks=tuple(BaseCheck(c["n"], unq(c["ratio"]), unq(c["bound"])) for c in d["baseChecks"]),
    )


def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "format": FORMAT,
        "verdict": cert.verdict.value,
        "reason": cert.reason,
        "strict": cert.strict,
        "N0": cert.n0,
        "rays": [
            {
                "name": r.name,
                "required": r.required.value,
                "start": r.start,
                "verdict": verdict_to_dict(r.verdict),
            }
            for r in cert.rays
        ],
        "witnesses": {name: rf_to_dict(r) for name, r in cert.witnesses.items()},
        "prefixChecks": [_prefix_to_dict(c) for c in cert.prefix_checks],
        "bounds": [bound_certificate_to_dict(b) for b in cert.bounds],
        "premises": list(cert.premises),
        "refutation": _prefix_to_dict(cert.refutation) if cert.refutation else None,
    }


def certificate_from_dict(d: dict) -> Certificate:
    if d.get("format") != FORMAT:
        raise ValueError(f"not a {FORMAT} document")
    return Certificate(
        verdict=Verdict(d["verdict"]),
        reason=d["reason"],
        strict=d["strict"],
        n0=d["N0"],
        witnesses={name: rf_from_dict(r) for name, r in d["witnesses"].items()},
        rays=tuple(
            RayClaim(r["name"], SignKind(r["required"]), r["start"], verdict_from_dict(r["verdict"]))
            for r in d["rays"]
        ),
        prefix_checks=tuple(_prefix_from_dict(c) for c in d["prefixChecks"]),
        bounds=tuple(bound_certificate_from_dict(b) for b in d["bounds"]),
        premises=tuple(d["premises"]),
        refutation=_prefix_from_dict(d["refutation"]) if d["refutation"] else None,
    )


def recurrence_to_dict(rec: Recurrence) -> dict:
    return {
        "p2": poly_to_list(rec.p2),
        "p1": poly_to_list(rec.p1),
        "p0": poly_to_list(rec.p0),
        "startIndex": rec.start_index,
        "initialValues": [q(v) for v in rec.initial_values],
    }


def verify_certificate(cert: Certificate, rec: Recurrence) -> list[str]:
    """Re-check a (possibly reloaded) certificate against ``rec``.

    Symbolic witnesses are re-derived from the stored ``a``, ``b`` and
    bound expressions, every ray claim is re-decided, and prefix
    values are recomputed from freshly generated terms.  Returns the
    list of mismatches; empty means the certificate re-validates.
    """
    problems: list[str] = []
    w = cert.witnesses

    def same(name: str, value: RationalFunction):
        if name in w and w[name] != value:
            problems.append(f"witness {name} does not match its recomputation")

    nr = normalize(rec)
    same("a", nr.a)
    same("b", nr.b)
    if "a" in w and "b" in w:
        a, b = w["a"], w["b"]
        c0, c1, c2, c3 = chenxia_formulas(a.shift(1), a.shift(2), a.shift(3), b.shift(1), b.shift(2), b.shift(3))
        for name, val in (("c0", c0), ("c1", c1), ("c2", c2), ("c3", c3)):
            same(name, val)
        Delta = 4 * c2 ** 2 - 12 * c1 * c3
        same("Delta", Delta)
        co = ChenXiaCoefficients(c0, c1, c2, c3, Delta)
        for bc in cert.bounds:
            if isinstance(bc, BoundFailure):
                continue
            if bc.bound.direction is Direction.LOWER:
                delta = delta_margin(c2, c3, bc.bound)
                same("delta", delta)
                same("delta^2-Delta", delta ** 2 - Delta)
            else:
                same("cubic_at_g", cubic_at_bound(co, bc.bound))

    for ray in cert.rays:
        if ray.start is None or ray.name not in w:
            continue
        fresh = sign_on_ray(w[ray.name], ray.start)
        if fresh.kind is not ray.verdict.kind:
            problems.append(f"ray {ray.name}: stored {ray.verdict.kind.value}, recomputed {fresh.kind.value}")
        if not fresh.implies(ray.required):
            problems.append(f"ray {ray.name} does not support the required sign {ray.required.value}")

    for bc in cert.bounds:
        if isinstance(bc, BoundFailure):
            continue
        fresh = sign_on_ray(bc.step_gap, bc.step_start)
        if not fresh.implies(SignKind.POSITIVE):
            problems.append(f"{bc.bound.direction.value} bound step gap is not positive from {bc.step_start}")
        terms = generate_terms(rec, max(bc.induction_from, rec.start_index))
        for c in bc.base_checks:
            if terms[c.index] / terms[c.index - 1] != c.ratio or bc.bound.expr.eval_int(c.index) != c.bound_value:
                problems.append(f"{bc.bound.direction.value} bound base case {c.index} does not match")

    if cert.prefix_checks:
        last = max(c.index for c in cert.prefix_checks)
        terms = generate_terms(rec, last + 3)
        for c in cert.prefix_checks:
            if two_log_convex_gap(terms, c.index) != c:
                problems.append(f"prefix check at n = {c.index} does not match")
    if cert.verdict is Verdict.CERTIFIED:
        if cert.n0 is None:
            problems.append("certified without N0")
        elif not cert.prefix_checks or max(c.index for c in cert.prefix_checks) < cert.n0 + 2:
            problems.append("prefix checks do not reach N0 + 2")
        if any(not r.holds for r in cert.rays):
            problems.append("certified with a failing ray claim")
    return problems
