"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines
inline; they are also repeated in the terminal summary.
"""

import random
import time
from fractions import Fraction

import pytest

import test_certifier
import test_sequences
import test_sign
from conftest import ACCEPTANCE_LINES
from seqcert.certifier import (
    Direction,
    RatioBound,
    certify_ratio_bound,
    certify_two_log_convex,
    chenxia_coefficients,
    cubic_at_bound,
    delta_margin,
    normalize,
    two_log_convex_gap,
)
from seqcert.cli import run
from seqcert.exactmath import Polynomial, SignKind, parse_expr, sign_on_ray
from seqcert.sequences import TermTable, check_log_behavior, clf_closed_form, clf_recurrence, generate_terms

CLF = clf_recurrence()
F = RatioBound(parse_expr("232*n/(15*(n+2))"), Direction.LOWER, 1)
G = RatioBound(parse_expr("16-16/n-16/n^3"), Direction.UPPER, 6)


class criterion:
    """Context manager timing a criterion and reporting one line."""

    def __init__(self, number: int, title: str, limit: float | None = None):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        over = self.limit is not None and elapsed >= self.limit
        ok = exc_type is None and not over
        limit = f" (limit {self.limit:g} s)" if self.limit else ""
        detail = ""
        if exc_type is not None:
            detail = f": {exc_type.__name__}: {exc}"
        elif over:
            detail = ": time limit exceeded"
        line = f"[criterion {self.number}] {'PASS' if ok else 'FAIL'} {self.title} in {elapsed:.2f} s{limit}{detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        if over:
            pytest.fail(f"criterion {self.number} took {elapsed:.2f} s, limit {self.limit} s")
        return False


def coefficients(p: Polynomial) -> list[int]:
    return p.primitive().integer_coeffs()[::-1]


def check_form(r, prefactor, numerator, den_factors):
    """r == prefactor * numerator / prod(den_factors), coefficient by coefficient."""
    c, num, den = r.content_form()
    expected_den = Polynomial.constant(1)
    for p in den_factors:
        expected_den = expected_den * p
    assert coefficients(num) == numerator
    assert den == expected_den.primitive()
    assert c == prefactor


def lin(k):
    return Polynomial([k, 1])


def test_criterion_1_terms_match_closed_form():
    with criterion(1, "generate_terms(CLF) == clf_closed_form for n <= 300, anchors", 10):
        t = generate_terms(CLF, 300, assert_integral=True)
        assert all(t[n] == clf_closed_form(n) for n in range(301))
        assert (t[0], t[1]) == (1, 8)
        assert t[2] / t[1] == 10
        assert t[6] / t[5] == Fraction(3562, 269)


def test_criterion_2_symbolic_witnesses():
    with criterion(2, "c3, delta, delta^2-Delta and cubic reproduce coefficient by coefficient", 5):
        co = chenxia_coefficients(normalize(CLF))
        n = Polynomial.x()
        check_form(
            co.c3, -512, [3, 5, -27, -32, 112, 234, 177, 63, 9],
            [lin(1) ** 6, lin(2) ** 2, lin(3) ** 2],
        )
        delta = delta_margin(co.c2, co.c3, F)
        check_form(
            delta, Fraction(8192, 5),
            [32, 129, 472, 3556, 12157, 17632, 10550, 1293, -1500, -798, -135],
            [lin(1) ** 6, lin(2) ** 4, lin(3) ** 2],
        )
        gap = delta ** 2 - co.Delta
        c, num, den = gap.content_form()
        # the prefactor carries a factor n: split it off the numerator
        assert num[0] == 0
        assert c == Fraction(67108864, 25)
        assert coefficients(num.exact_div(n)) == [
            699, 2158, 6983, 97994, 155517, -1256916, -3302168, 5191280, 25505142, 14486584,
            -63005002, -153766236, -178037517, -131841558, -68012397, -24910146, -6269211, -975888, -70470,
        ]
        assert den == (lin(3) ** 4 * lin(2) ** 7 * lin(1) ** 12).primitive()
        cubic = cubic_at_bound(co, G)
        check_form(
            cubic, 1048576,
            [54, 378, 916, 644, -1529, -5340, -8383, -7416, -2284, 4156, 7969, 7688, 4953, 2154, 576, 72],
            [n ** 9, lin(1) ** 6, lin(2) ** 4, lin(3) ** 2],
        )


def test_criterion_3_ray_verdicts():
    with criterion(3, "ray verdicts c3<0 (n>=1), delta>=0 (n>=1), delta^2-Delta>=0 (n>=3), cubic>0 (n>=6)"):
        co = chenxia_coefficients(normalize(CLF))
        delta = delta_margin(co.c2, co.c3, F)
        claims = [
            (co.c3, 1, SignKind.NEGATIVE, lambda v: v < 0),
            (delta, 1, SignKind.NONNEGATIVE, lambda v: v >= 0),
            (delta ** 2 - co.Delta, 3, SignKind.NONNEGATIVE, lambda v: v >= 0),
            (cubic_at_bound(co, G), 6, SignKind.POSITIVE, lambda v: v > 0),
        ]
        rng = random.Random(3)
        for r, start, kind, ok in claims:
            v = sign_on_ray(r, start)
            assert v.implies(kind)
            samples = rng.sample(range(start, 10 ** 6 + 1), 200)
            assert all(ok(r.eval_int(m)) for m in samples)
        # the ray for delta^2 - Delta cannot start earlier
        assert (delta ** 2 - co.Delta).eval_int(2) < 0


def test_criterion_4_bound_certificates():
    with criterion(4, "ratio-bound certificates for f and g with their step gaps"):
        lower = certify_ratio_bound(CLF, F)
        assert lower.step_gap == parse_expr("8*(14*n^3+447*n^2-873*n+464)/(435*(n+1)^2*(n+3))")
        assert lower.step_verdict.kind is SignKind.POSITIVE
        upper = certify_ratio_bound(CLF, G)
        assert upper.step_gap == parse_expr("8*(5*n^2+2*n+3)/((n+1)^3*(n^3-n^2-1))")
        assert upper.step_start == 2 and upper.step_verdict.kind is SignKind.POSITIVE
        assert [c.index for c in upper.base_checks] == [6]
        assert upper.base_checks[0].ratio == Fraction(3562, 269) < Fraction(358, 27)


def test_criterion_5_end_to_end():
    with criterion(5, "seqcert certify clf: Certified, N0 = 6, strict; exact check for 1 <= n <= 200", 30):
        report = run(["certify", "clf"])
        assert report.exit_code == 0
        assert report.verdicts == [{"verdict": "Certified", "N0": 6, "strict": True}]
        t = generate_terms(CLF, 203)
        assert all(two_log_convex_gap(t, n).strict for n in range(1, 201))


def brute_l(values):
    return [values[i - 1] * values[i + 1] - values[i] ** 2 for i in range(1, len(values) - 1)]


def brute_strictly_k_log_convex(values, k):
    stage = list(values)
    for _ in range(k):
        if not all(stage[i] ** 2 < stage[i - 1] * stage[i + 1] for i in range(1, len(stage) - 1)):
            return False
        stage = brute_l(stage)
    return True


def test_criterion_6_empirical_evidence():
    with criterion(6, "k-log-convexity k=3,4,5 (n<=60) and quotient log-concavity (n<=500), brute-force consistent"):
        # 20-term prefix checked by plain list arithmetic, independent of the checker
        head = [clf_closed_form(n) for n in range(20)]
        table = TermTable.of(head)
        for k in (3, 4, 5):
            assert check_log_behavior(table, "k-log-convex", strict=True, k=k).holds == brute_strictly_k_log_convex(head, k)
        brute_quot = all(head[n - 2] * head[n] ** 3 >= head[n + 1] * head[n - 1] ** 3 for n in range(2, 19))
        assert check_log_behavior(table, "quotient-log-concave").holds == brute_quot

        findings = []
        t60 = generate_terms(CLF, 60)
        for k in (3, 4, 5):
            v = check_log_behavior(t60, "k-log-convex", strict=True, k=k)
            findings.append(f"k={k}: {'holds' if v.holds else f'fails at n={v.first_violation.index}'}")
        v = check_log_behavior(generate_terms(CLF, 500), "quotient-log-concave")
        findings.append(f"quotient: {'holds' if v.holds else f'fails at n={v.first_violation.index}'}")
        print("  empirical evidence:", "; ".join(findings))


def test_criterion_7_invariant_suites():
    with criterion(7, "invariant property suites"):
        test_sequences.test_geometric_tables_are_l_null()
        test_sequences.test_quotient_equivalence()
        test_sequences.test_factorial_free_test_matches_direct()
        test_sequences.test_one_log_convex_is_log_convex()
        test_sign.test_sign_soundness_sampling()
        co = chenxia_coefficients(normalize(CLF))
        test_certifier.test_coefficients_symbolic_vs_numeric(co)
        test_certifier.test_delta_equivalence_to_square_root_condition(co)
        test_certifier.test_normalization_round_trip()
        test_certifier.test_certificate_soundness(certify_two_log_convex(CLF, F, G))
