from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from witt_forge import totalpos as tp
from witt_forge.partitions import partitions_of

S = tp.TruncSeries.from_poly


def test_series_basics():
    s = S([1, 3, 2])
    assert s.n == 2 and s.coef(0) == 1 and s.coef(2) == 2 and s.coef(5) == 0
    assert s.degree() == 2
    with pytest.raises(ValueError):
        S([2, 1])
    with pytest.raises(TypeError):
        tp.TruncSeries((0.5,))


def test_minor_examples():
    assert tp.toeplitz_minors_nonneg(S([1, 3, 2]), 3).ok
    v = tp.toeplitz_minors_nonneg(S([1, 1, 1]), 3)
    assert not v.ok and v.witness == ((1, 2, 3), (0, 1, 2)) and v.value == -1
    assert tp.minor(S([1, 1, 1]), (1, 2, 3), (0, 1, 2)) == -1
    for r in range(1, 6):
        assert tp.toeplitz_minors_nonneg(tp.TruncSeries((0,)), r).ok


def test_minor_order_limits():
    with pytest.raises(ValueError):
        tp.toeplitz_minors_nonneg(S([1, 1]), 0)
    with pytest.raises(ValueError):
        tp.toeplitz_minors_nonneg(S([1, 1]), tp.MAX_ORDER + 1)


def test_bareiss_matches_sympy():
    import random

    rng = random.Random(7)
    for _ in range(50):
        size = rng.randint(1, 5)
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(size)] for _ in range(size)]
        want = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows]).det()
        assert tp._det(rows) == Fraction(int(want.p), int(want.q))


def test_skew_schur_examples():
    a1, a2 = Fraction(3), Fraction(5, 2)
    s = tp.TruncSeries((a1, a2))
    assert tp.skew_schur_witness(s, (1,)) == a1
    assert tp.skew_schur_witness(s, (1, 1)) == a1 * a1 - a2
    with pytest.raises(ValueError):
        tp.skew_schur_witness(s, (1,), (2,))


small = st.fractions(min_value=0, max_value=4, max_denominator=3)


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=3))
def test_skew_minors_agree_with_verdicts(coeffs):
    s = tp.TruncSeries(tuple(coeffs))
    # every minor of order <= 3 is a skew Schur value; restricted to the
    # index window the two descriptions must give the same verdict
    window = max(s.n, 3)
    values = []
    for n in range(0, 7):
        for lam in partitions_of(n):
            if len(lam) > 3:
                continue
            for m in range(0, n + 1):
                for mu in partitions_of(m):
                    if len(mu) <= len(lam) and all(x <= y for x, y in zip(mu, lam)):
                        rows, cols = tp.skew_shape_indices(lam, mu)
                        v = tp.skew_schur_witness(s, lam, mu)
                        assert v == tp.minor(s, rows, cols)
                        if max(rows, default=0) <= window:
                            values.append(v)
    verdict = tp.toeplitz_minors_nonneg(s, 3)
    if verdict.ok:
        assert all(v >= 0 for v in values)
    else:
        assert verdict.value < 0


def test_window_limits_positive_verdicts():
    # 1 + t + t^2 + t^3 has roots -1, +-i, so it is not totally nonnegative,
    # but no negative minor fits in indices 0..3; a wider order finds one
    s = S([1, 1, 1, 1])
    assert tp.toeplitz_minors_nonneg(s, 3).ok
    assert not tp.toeplitz_minors_nonneg(s, 4).ok
    assert not tp.nonpositive_real_roots(s).ok


def test_roots_examples():
    assert tp.nonpositive_real_roots(S([1, 3, 2])).ok
    assert not tp.nonpositive_real_roots(S([1, 1, 1])).ok
    assert tp.nonpositive_real_roots(S([1, 2, 1])).ok
    assert tp.nonpositive_real_roots(S([1, 0, 0])).ok
    assert not tp.nonpositive_real_roots(S([1, -1])).ok
    with pytest.raises(ValueError):
        tp.nonpositive_real_roots(tp.TruncSeries((Fraction(1, 2),)))


def sympy_verdict(coeffs):
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x)
    if poly.degree() <= 0:
        return True
    roots = sympy.real_roots(poly)
    return len(roots) == poly.degree() and all(r <= 0 for r in roots)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5))
def test_roots_match_sympy(tail):
    coeffs = [1] + tail
    assert tp.nonpositive_real_roots(S(coeffs)).ok == sympy_verdict(coeffs)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=5), st.integers(0, 2))
def test_products_of_linear_factors(roots, extra_zeros):
    poly = [Fraction(1)]
    for a in roots:
        poly = [(poly[i] if i < len(poly) else 0) + (a * poly[i - 1] if i else 0) for i in range(len(poly) + 1)]
    s = S(poly + [0] * extra_zeros)
    assert tp.nonpositive_real_roots(s).ok
    assert tp.linear_factors_nat(s) == sorted(roots)
    assert tp.toeplitz_minors_nonneg(s, 4).ok
    assert tp.factorial_bound_check(s).ok


def test_linear_factors_rejects():
    assert tp.linear_factors_nat(S([1, 3, 1])) is None  # real roots, irrational
    assert tp.linear_factors_nat(S([1, 1, 1])) is None
    assert tp.linear_factors_nat(S([1, -2])) is None


def test_squarefree_decomposition():
    # (1+t)^2 (2+t)
    parts = tp.squarefree_decomposition([2, 5, 4, 1])
    assert [m for _, m in parts] == [1, 2]
    assert tp.sturm_count_negative([2, 3, 1]) == 2
    assert tp.sturm_count_negative([1, 0, 1]) == 0


def test_edrei_thoma_examples():
    assert tp.edrei_thoma_truncation(1, [], [], 6).as_list() == [Fraction(1, factorial(m)) for m in range(7)]
    assert tp.edrei_thoma_truncation(0, [], [Fraction(1, 2)], 5).as_list() == [Fraction(1, 2**m) for m in range(6)]
    assert tp.edrei_thoma_truncation(0, [1], [1], 5).as_list() == [1, 2, 2, 2, 2, 2]
    with pytest.raises(ValueError):
        tp.edrei_thoma_truncation(-1, [], [], 3)


@settings(max_examples=25, deadline=None)
@given(
    st.fractions(min_value=0, max_value=2, max_denominator=3),
    st.lists(st.fractions(min_value=0, max_value=2, max_denominator=3), max_size=1),
    st.lists(st.fractions(min_value=0, max_value=1, max_denominator=3), max_size=1),
)
def test_edrei_thoma_series_are_totally_nonnegative(gamma, alphas, betas):
    s = tp.edrei_thoma_truncation(gamma, alphas, betas, 5)
    assert tp.toeplitz_minors_nonneg(s, 3).ok


def test_factorial_bound():
    assert tp.factorial_bound_check(S([1, 2, 1])).ok
    v = tp.factorial_bound_check(S([1, 1, 1]))
    assert not v.ok and v.witness == 2
    g = Fraction(3, 2)
    assert tp.factorial_bound_check(tp.edrei_thoma_truncation(g, [], [], 6)).ok


@settings(max_examples=80, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=4), st.integers(1, 4))
def test_witness_value_is_the_unscaled_minor(coeffs, order):
    s = tp.TruncSeries(tuple(coeffs))
    v = tp.toeplitz_minors_nonneg(s, order)
    if not v.ok:
        rows, cols = v.witness
        assert v.value == tp.minor(s, rows, cols) < 0
    else:
        window = max(s.n, order)
        for r in range(1, order + 1):
            for rows in combinations(range(window + 1), r):
                for cols in combinations(range(window + 1), r):
                    assert tp.minor(s, rows, cols) >= 0
