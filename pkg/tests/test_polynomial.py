from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqcert.exactmath import Polynomial, poly_gcd, squarefree_part

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10 ** 6)
polys = st.lists(rationals, max_size=8).map(Polynomial)


def lagrange(points):
    """Interpolating polynomial through (x, y) pairs; independent of Polynomial.shift."""
    total = Polynomial()
    for i, (xi, yi) in enumerate(points):
        term = Polynomial.constant(yi)
        for j, (xj, _) in enumerate(points):
            if i != j:
                term = term * Polynomial((-Fraction(xj), 1)).scale(Fraction(1, xi - xj))
        total = total + term
    return total


def test_difference_of_squares():
    assert Polynomial([1, 1]) * Polynomial([-1, 1]) == Polynomial([-1, 0, 1])


def test_add_zero_is_identity():
    p = Polynomial([3, 0, -2, 7])
    assert p + Polynomial() == p


def test_clf_recurrence_spot_value():
    # 8(3n^2+3n+1) at n=1 is 56; 56*P1 - 128*P0 = 320 = (1+1)^2 * P2 with P2 = 80
    p1 = Polynomial([1, 3, 3]).scale(8)
    p0 = Polynomial([0, 0, 128])
    assert p1(1) == 56
    assert p1(1) * 8 - p0(1) * 1 == 320 == 4 * 80


def test_canonical_zero_and_trailing_trim():
    assert Polynomial([0, 0, 0]).coeffs == ()
    assert Polynomial([1, 2, 0]).degree == 1
    assert Polynomial().degree == -1


def test_shift_examples():
    assert Polynomial([0, 0, 1]).shift(1) == Polynomial([1, 2, 1])
    assert Polynomial([5]).shift(7) == Polynomial([5])


def test_shift_step_gap_numerator_has_positive_coefficients():
    p = Polynomial([464, -873, 447, 14])
    shifted = p.shift(1)
    # oracle: interpolate p(m + 1) at four points
    expected = lagrange([(m, p(m + 1)) for m in range(4)])
    assert shifted == expected == Polynomial([52, 63, 489, 14])
    assert all(c > 0 for c in shifted.coeffs)


def test_rational_shift():
    p = Polynomial([1, -3, 0, 2])
    c = Fraction(-5, 3)
    assert p.shift(c) == lagrange([(x, p(x + c)) for x in range(4)])


def test_divmod_reconstructs():
    a = Polynomial([3, -1, 4, 1, 5])
    b = Polynomial([2, 0, 7])
    qt, r = divmod(a, b)
    assert qt * b + r == a
    assert r.degree < b.degree
    with pytest.raises(ZeroDivisionError):
        divmod(a, Polynomial())


def test_gcd_and_squarefree():
    p = Polynomial.from_roots([1, 2, 2, 5])
    q = Polynomial.from_roots([2, 5, 7])
    assert poly_gcd(p, q) == Polynomial.from_roots([2, 5])
    assert squarefree_part(p).monic() == Polynomial.from_roots([1, 2, 5])
    assert poly_gcd(Polynomial([3]), q) == 1


def test_content_and_primitive():
    p = Polynomial([Fraction(1, 2), Fraction(3, 4), -1])
    assert p.primitive() == Polynomial([-2, -3, 4])
    assert p.primitive() * p.content() == -p


@settings(max_examples=200)
@given(polys, polys, rationals, st.sampled_from(["add", "sub", "mul"]))
def test_evaluation_homomorphism(p, q, x, op):
    r = {"add": p + q, "sub": p - q, "mul": p * q}[op]
    expected = {"add": p(x) + q(x), "sub": p(x) - q(x), "mul": p(x) * q(x)}[op]
    assert r(x) == expected
    if op == "mul" and p and q:
        assert r.degree == p.degree + q.degree
    if op != "mul":
        assert r.degree <= max(p.degree, q.degree)


@settings(max_examples=200)
@given(polys, rationals, rationals)
def test_shift_correctness(p, c, x):
    assert p.shift(c)(x) == p(x + c)


@given(polys, st.integers(-10 ** 6, 10 ** 6))
def test_eval_int_matches_fraction_eval(p, n):
    assert p.eval_int(n) == p(n)
