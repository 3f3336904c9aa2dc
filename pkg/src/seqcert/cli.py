"""``seqcert`` command line front end.

Exit codes: 0 holds / Certified, 1 refuted, 2 unknown / inapplicable,
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .certifier import BoundFailure, Certificate, Verdict, certify_two_log_convex
from .errors import PrefixTooShort, SeqCertError, SpecSyntaxError
from .report import certificate_from_dict, certificate_to_dict, q, recurrence_to_dict, verify_certificate
from .sequences import LogProperty, check_log_behavior, clf_closed_form, generate_terms
from .specfile import SequenceSpec, parse_spec

EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3

_VERDICT_EXIT = {
    Verdict.CERTIFIED: EXIT_OK,
    Verdict.REFUTED: EXIT_REFUTED,
    Verdict.INAPPLICABLE: EXIT_UNKNOWN,
    Verdict.UNKNOWN: EXIT_UNKNOWN,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Report:
    command: list[str]
    exit_code: int = EXIT_OK
    verdicts: list[dict] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    payload: dict | None = None
    seconds: float = 0.0

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "exitCode": self.exit_code,
            "verdicts": self.verdicts,
            "seconds": round(self.seconds, 6),
        }
        if self.payload is not None:
            out["certificate"] = self.payload
        return out


def load_spec(path: str) -> SequenceSpec:
    """Read a spec file; bare names fall back to the bundled corpus."""
    p = Path(path)
    if p.exists():
        text = p.read_text()
    else:
        name = path if path.endswith(".seq") else f"{path}.seq"
        bundled = resources.files("seqcert").joinpath("data", name)
        if not bundled.is_file():
            raise UsageError(f"no such spec file: {path}")
        text = bundled.read_text()
    return parse_spec(text)


def _fmt(x: Fraction, approx: bool) -> str:
    s = q(x)
    if approx and x.denominator != 1:
        s += f"  (~{float(x):.12g}, lossy)"
    return s


def _generate(spec: SequenceSpec, args, report: Report) -> None:
    rec = spec.recurrence()
    terms = generate_terms(rec, args.to)
    for n, v in terms.items():
        report.lines.append(f"z[{n}] = {_fmt(v, args.approx)}")
    report.verdicts.append({"terms": {str(n): q(v) for n, v in terms.items()}})
    if spec.closed_form == "clf-binomial-sum":
        bad = next((n for n, v in terms.items() if n >= 0 and clf_closed_form(n) != v), None)
        ok = bad is None
        report.verdicts.append({"closedForm": spec.closed_form, "agrees": ok, "firstMismatch": bad})
        report.lines.append(
            f"closed form {spec.closed_form}: " + ("agrees on all terms" if ok else f"MISMATCH at n = {bad}")
        )
        if not ok:
            report.exit_code = EXIT_REFUTED


def _check(spec: SequenceSpec, args, report: Report) -> None:
    prop = LogProperty(args.property)
    if prop is LogProperty.K_LOG_CONVEX and args.k is None:
        raise UsageError("--property k-log-convex needs --k")
    terms = generate_terms(spec.recurrence(), args.to)
    v = check_log_behavior(terms, prop, strict=args.strict, k=args.k)
    label = prop.value if prop is not LogProperty.K_LOG_CONVEX else f"{args.k}-log-convex"
    label = ("strictly " if args.strict else "") + label
    entry = {"property": prop.value, "k": v.k, "strict": v.strict, "holds": v.holds,
             "range": list(v.checked_range)}
    if v.holds:
        report.lines.append(f"{label}: holds for n in [{v.checked_range[0]}, {v.checked_range[1]}]")
    else:
        bad = v.first_violation
        where = f" (stage L^{bad.stage})" if bad.stage else ""
        clause = f" [{bad.clause}]" if bad.clause else ""
        report.lines.append(
            f"{label}: FAILS at n = {bad.index}{where}{clause}: need {_fmt(bad.lhs, args.approx)} "
            f"{bad.relation} {_fmt(bad.rhs, args.approx)}"
        )
        entry["firstViolation"] = {"n": bad.index, "stage": bad.stage, "clause": bad.clause,
                                   "lhs": q(bad.lhs), "relation": bad.relation, "rhs": q(bad.rhs)}
        report.exit_code = EXIT_REFUTED
    report.verdicts.append(entry)


def _describe_certificate(cert: Certificate, lines: list[str]) -> None:
    lines.append(f"verdict: {cert.verdict.value} ({cert.reason})")
    lines.append(f"strict: {'yes' if cert.strict else 'no'}")
    if cert.n0 is not None:
        lines.append(f"N0 = {cert.n0}")
    for r in cert.rays:
        kind = r.verdict.kind.value if r.verdict else "?"
        start = "never" if r.start is None else f"n >= {r.start}"
        lines.append(f"  ray {r.name:<14} required {r.required.value:<11} {start:<9} -> {kind} [{r.verdict.method}]")
    for b in cert.bounds:
        if isinstance(b, BoundFailure):
            lines.append(f"  {b.direction.value} bound: FAILED: {b.reason}")
            continue
        c, pn, pd = b.step_gap.content_form()
        lines.append(
            f"  {b.bound.direction.value} bound {b.bound.expr} (n >= {b.bound.valid_from}): "
            f"base cases n in [{b.bound.valid_from}, {b.induction_from}], "
            f"step gap {c}*({pn})/({pd}) Positive for n >= {b.step_start}"
        )
    if cert.prefix_checks:
        lo = cert.prefix_checks[0].index
        hi = cert.prefix_checks[-1].index
        ok = all(c.holds for c in cert.prefix_checks)
        lines.append(f"  prefix checks n in [{lo}, {hi}]: {'all hold' if ok else 'FAIL'}")
    for p in cert.premises:
        lines.append(f"  premise: {p}")
    if cert.refutation is not None:
        r = cert.refutation
        lines.append(f"  refuted at n = {r.index}: {q(r.lhs)} <= {q(r.rhs)}")


def _bounds(spec: SequenceSpec):
    f, g = spec.lower_bound(), spec.upper_bound()
    if f is None or g is None:
        raise UsageError("certification needs both [bounds] lower and upper in the spec file")
    return f, g


def _certify(spec: SequenceSpec, args, report: Report) -> None:
    f, g = _bounds(spec)
    rec = spec.recurrence()
    try:
        cert = certify_two_log_convex(rec, f, g, args.to_prefix)
    except PrefixTooShort as exc:
        raise UsageError(str(exc)) from None
    _describe_certificate(cert, report.lines)
    doc = certificate_to_dict(cert)
    doc["recurrence"] = recurrence_to_dict(rec)
    report.payload = doc
    report.verdicts.append({"verdict": cert.verdict.value, "N0": cert.n0, "strict": cert.strict})
    report.exit_code = _VERDICT_EXIT[cert.verdict]
    if args.output:
        Path(args.output).write_text(json.dumps(doc, indent=2) + "\n")
        report.lines.append(f"certificate written to {args.output}")


def _verify(spec: SequenceSpec, args, report: Report) -> None:
    try:
        doc = json.loads(Path(args.certificate).read_text())
        cert = certificate_from_dict(doc)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load certificate: {exc}") from None
    problems = verify_certificate(cert, spec.recurrence())
    report.verdicts.append({"verdict": cert.verdict.value, "problems": problems})
    if problems:
        report.lines += [f"MISMATCH: {p}" for p in problems]
        report.exit_code = EXIT_REFUTED
    else:
        report.lines.append(f"certificate re-validates: {cert.verdict.value}, N0 = {cert.n0}")
        report.exit_code = _VERDICT_EXIT[cert.verdict]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="seqcert", description="Exact log-behavior checks and 2-log-convexity certificates.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="sequence spec file (or a bundled name: clf, fibonacci, factorial)")
    common.add_argument("--json", action="store_true", help="print the machine-readable report")
    common.add_argument("--approx", action="store_true", help="add lossy decimal renderings")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", parents=[common], help="print exact terms")
    gen.add_argument("--to", type=int, required=True, metavar="N")

    chk = sub.add_parser("check", parents=[common], help="test a log-behavior property")
    chk.add_argument("--property", required=True, choices=[p.value for p in LogProperty])
    chk.add_argument("--k", type=int)
    chk.add_argument("--to", type=int, required=True, metavar="N")
    chk.add_argument("--strict", action="store_true")

    cert = sub.add_parser("certify", parents=[common], help="certify strict 2-log-convexity")
    cert.add_argument("--to-prefix", type=int, metavar="N", help="last index of the exact prefix check")
    cert.add_argument("--output", "-o", help="write the certificate JSON here")

    ver = sub.add_parser("verify", parents=[common], help="re-validate a certificate file")
    ver.add_argument("certificate")
    return parser


_HANDLERS = {"generate": _generate, "check": _check, "certify": _certify, "verify": _verify}


def run(argv: list[str]) -> Report:
    args = build_parser().parse_args(argv)
    report = Report(command=["seqcert", *argv])
    start = time.perf_counter()
    try:
        spec = load_spec(args.spec)
        _HANDLERS[args.command](spec, args, report)
    except (UsageError, SpecSyntaxError) as exc:
        report.exit_code = EXIT_USAGE
        report.lines.append(f"error: {exc}")
    except SeqCertError as exc:
        report.exit_code = EXIT_UNKNOWN
        report.lines.append(f"error: {type(exc).__name__}: {exc}")
    report.seconds = time.perf_counter() - start
    return report


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report = run(argv)
    if "--json" in argv:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"$ {' '.join(report.command)}")
        for line in report.lines:
            print(line)
        print(f"({report.seconds:.3f} s)")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
