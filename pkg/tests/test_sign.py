import random
from fractions import Fraction

import pytest

from seqcert.errors import PoleOnRay
from seqcert.exactmath import (
    Polynomial,
    RationalFunction,
    SignKind,
    SignVerdict,
    integer_roots,
    isolate_roots,
    parse_expr,
    sign_on_ray,
    smallest_ray_start,
)

P = parse_expr


def brute_signs(r: RationalFunction, lo: int, hi: int) -> set[int]:
    out = set()
    for n in range(lo, hi + 1):
        v = r.eval_int(n)
        out.add((v > 0) - (v < 0))
    return out


def test_upper_step_gap_positive_from_two():
    r = P("(5*k^2+2*k+3)/((k+1)^3*(k^3-k^2-1))".replace("k", "n"))
    assert sign_on_ray(r, 2).kind is SignKind.POSITIVE
    # k = 1 makes k^3 - k^2 - 1 negative
    assert sign_on_ray(r, 1).kind is SignKind.MIXED


def test_negative_constant():
    v = sign_on_ray(RationalFunction.constant(-1), 0)
    assert v.kind is SignKind.NEGATIVE
    assert v.implies("Nonpositive") and not v.implies("Nonnegative")


def test_mixed_with_witnesses():
    v = sign_on_ray(P("n-5"), 3)
    assert v.kind is SignKind.MIXED
    assert v.witnesses == ((3, -2), (6, 1))


def test_zero_function():
    v = sign_on_ray(RationalFunction.constant(0), 4)
    assert v.kind is SignKind.ZERO
    assert v.implies(SignKind.NONNEGATIVE) and v.implies(SignKind.NONPOSITIVE)


def test_nonnegative_with_root_on_ray():
    r = P("(n-4)^2*(n+1)")
    for method in ("shift", "sturm", "auto"):
        v = sign_on_ray(r, 0, method)
        if v.kind is not SignKind.UNKNOWN:
            assert v.kind is SignKind.NONNEGATIVE
    assert sign_on_ray(r, 5).kind is SignKind.POSITIVE
    # root exactly at the ray start
    assert sign_on_ray(P("n-7"), 7).kind is SignKind.NONNEGATIVE


def test_root_between_integers_only():
    # roots at 5.5 and 5.6: no integer sees a negative value
    r = P("(10*n-55)*(10*n-56)")
    assert sign_on_ray(r, 0, "sturm").kind is SignKind.POSITIVE
    assert brute_signs(r, 0, 50) == {1}


def test_pole_on_ray():
    with pytest.raises(PoleOnRay) as exc:
        sign_on_ray(P("1/((n-3)*(n-9))"), 5)
    assert exc.value.index == 9
    with pytest.raises(PoleOnRay):
        sign_on_ray(P("1/(n-5)"), 5, "shift")
    assert sign_on_ray(P("1/(n-3)"), 4).kind is SignKind.POSITIVE


def test_shift_method_can_be_unknown():
    v = sign_on_ray(P("n^2-3*n+3"), 0, "shift")
    assert v.kind is SignKind.UNKNOWN
    assert v.witnesses == ()
    assert sign_on_ray(P("n^2-3*n+3"), 0).kind is SignKind.POSITIVE


def test_mixed_requires_both_witnesses():
    with pytest.raises(ValueError):
        SignVerdict(SignKind.MIXED, 0, ((1, Fraction(1)),))


def test_smallest_ray_start():
    r = P("(n-3)*(n-10)*(n-11)")
    assert smallest_ray_start(r, 0, "Positive") == 12
    assert smallest_ray_start(r, 0, "Nonnegative") == 3
    assert smallest_ray_start(-r, 0, "Positive") is None
    assert smallest_ray_start(P("1/(n-6)"), 0, "Positive") == 7


def test_integer_roots():
    p = Polynomial.from_roots([-2, 3, 4, Fraction(9, 2), 11])
    assert integer_roots(p, 0) == [3, 4, 11]
    assert integer_roots(p, 5) == [11]


def test_isolate_roots_counts_and_widths():
    p = Polynomial.from_roots([1, Fraction(3, 2), 2, 40])
    intervals = isolate_roots(p, Fraction(0))
    assert len(intervals) == 4
    for (a, b), root in zip(intervals, [1, Fraction(3, 2), 2, 40]):
        assert a < root <= b and b - a <= Fraction(1, 2)


def _random_rf(rng: random.Random) -> RationalFunction:
    def poly():
        deg = rng.randint(0, 8)
        coeffs = [rng.randint(-50, 50) for _ in range(deg + 1)]
        if not any(coeffs):
            coeffs[0] = 1
        return Polynomial(coeffs)

    return RationalFunction(poly(), poly())


def _verdict_or_pole(r, N, method):
    try:
        return sign_on_ray(r, N, method)
    except PoleOnRay as exc:
        return ("pole", exc.index)


def test_shift_and_sturm_paths_agree():
    rng = random.Random(20240521)
    concluded = 0
    for _ in range(100):
        r = _random_rf(rng)
        N = rng.randint(0, 6)
        a = _verdict_or_pole(r, N, "shift")
        b = _verdict_or_pole(r, N, "sturm")
        if isinstance(a, tuple) or isinstance(b, tuple):
            if isinstance(a, tuple) and isinstance(b, tuple):
                assert a == b
            continue
        if a.kind is SignKind.UNKNOWN:
            continue
        concluded += 1
        assert a.kind is b.kind
    assert concluded >= 10


def _root_rich_rf(rng: random.Random) -> RationalFunction:
    # integer and half-integer roots near the ray make the Sturm path work
    roots = [Fraction(rng.randint(0, 40), rng.choice([1, 2])) for _ in range(rng.randint(0, 5))]
    num = Polynomial.from_roots(roots, lead=rng.choice([-3, -1, 1, 2]))
    den_roots = [Fraction(-rng.randint(1, 9)) for _ in range(rng.randint(0, 3))]
    den = Polynomial.from_roots(den_roots) * Polynomial([rng.randint(1, 5), 0, 1])
    return RationalFunction(num, den)


def test_sign_soundness_sampling():
    rng = random.Random(7)
    claims = {
        SignKind.POSITIVE: lambda v: v > 0,
        SignKind.NEGATIVE: lambda v: v < 0,
        SignKind.NONNEGATIVE: lambda v: v >= 0,
        SignKind.NONPOSITIVE: lambda v: v <= 0,
        SignKind.ZERO: lambda v: v == 0,
    }
    seen = set()
    for _ in range(60):
        r = _root_rich_rf(rng)
        N = rng.randint(0, 45)
        v = sign_on_ray(r, N)
        seen.add(v.kind)
        if v.kind is SignKind.MIXED:
            assert any(w > 0 for _, w in v.witnesses) and any(w < 0 for _, w in v.witnesses)
            for n, w in v.witnesses:
                assert r.eval_int(n) == w
            continue
        ok = claims[v.kind]
        points = [N + k for k in range(60)] + [rng.randint(N, N + 10 ** 6) for _ in range(200)]
        assert all(ok(r.eval_int(n)) for n in points), (r, N, v)
    assert {SignKind.POSITIVE, SignKind.MIXED} <= seen
