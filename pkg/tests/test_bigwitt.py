from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from witt_forge import bigwitt as bw
from witt_forge.bigwitt import Domain
from witt_forge.partitions import CapacityError, partitions_of
from witt_forge.symfunc import SymFunc, d_p, from_basis, theta

q = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def ghosts(n):
    return st.lists(q, min_size=n, max_size=n).map(bw.from_ghost)


def test_distinguished_vectors():
    assert bw.ghost(bw.teichmuller(2, 4)) == (2, 4, 8, 16)
    assert bw.ghost(bw.anti_teichmuller(1, 4)) == (1, -1, 1, -1)
    assert bw.ghost(bw.zero(3)) == (0, 0, 0)
    assert bw.ghost(bw.one(3)) == (1, 1, 1)


@pytest.mark.parametrize("a", [Fraction(2), Fraction(-1, 3), Fraction(5, 2)])
def test_values_on_teichmuller_lifts(a):
    n = 5
    for r in range(1, n + 1):
        for lam in partitions_of(r):
            want = a**r if lam == (r,) else 0
            assert bw.value_at(bw.teichmuller(a, n), from_basis("m", lam)) == want
            want = a**r if lam == (1,) * r else 0
            assert bw.value_at(bw.anti_teichmuller(a, n), from_basis("s", lam)) == want


def test_value_at_psi1_and_capacity():
    x = bw.from_ghost([3, 1, 4])
    assert bw.value_at(x, SymFunc.power_sum((1,))) == 3
    with pytest.raises(CapacityError):
        bw.value_at(x, SymFunc.power_sum((4,)))
    # degree 4 but only p_1, p_2 used: still evaluable
    assert bw.value_at(x, SymFunc.power_sum((2, 2))) == 1


def test_series_examples():
    a = Fraction(3, 7)
    assert bw.to_series(bw.teichmuller(a, 4), "++") == [1, a, 0, 0, 0]
    assert bw.to_series(bw.teichmuller(a, 3), "--") == [1, a, a**2, a**3]
    assert bw.to_series(bw.xi(6), "--") == [Fraction(1, factorial(i)) for i in range(7)]


def test_from_series_needs_leading_one():
    with pytest.raises(ValueError):
        bw.from_series([2, 1])


@settings(max_examples=60, deadline=None)
@given(ghosts(5), st.sampled_from(sorted(bw.NORMALIZATIONS)))
def test_series_round_trip(x, norm):
    assert bw.from_series(bw.to_series(x, norm), norm) == x


@settings(max_examples=60, deadline=None)
@given(ghosts(5), ghosts(5), st.sampled_from(sorted(bw.NORMALIZATIONS)))
def test_sigma_is_additive_to_multiplicative(x, y, norm):
    assert bw.to_series(x + y, norm) == bw.series_product(bw.to_series(x, norm), bw.to_series(y, norm))


def test_series_inverse():
    s = [Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3)]
    assert bw.series_product(s, bw.series_inverse(s)) == [1, 0, 0, 0]


def test_witt_coordinates():
    a = Fraction(-2, 3)
    assert bw.witt_coords(bw.teichmuller(a, 6)) == [a, 0, 0, 0, 0, 0]
    assert bw.witt_coords(bw.zero(4)) == [0, 0, 0, 0]
    t = Fraction(5, 2)
    for d in range(1, 7):
        coords = [0] * 6
        coords[d - 1] = t
        g = bw.ghost(bw.from_witt_coords(coords))
        assert g == tuple(d * t ** (m // d) if m % d == 0 else 0 for m in range(1, 7))


@settings(max_examples=60, deadline=None)
@given(ghosts(6))
def test_witt_coords_round_trip(x):
    assert bw.from_witt_coords(bw.witt_coords(x)) == x


def test_witt_coords_are_theta_values():
    x = bw.from_ghost([2, -1, Fraction(1, 2), 3])
    assert bw.witt_coords(x) == [bw.value_at(x, theta(d)) for d in range(1, 5)]


@settings(max_examples=40, deadline=None)
@given(q, q)
def test_teichmuller_identities(a, b):
    n = 5
    T, A = bw.teichmuller, bw.anti_teichmuller
    assert T(a, n) * T(b, n) == T(a * b, n)
    assert A(a, n) * A(b, n) == T(a * b, n)
    assert T(a, n) * A(b, n) == A(a * b, n)
    assert A(a, n) == A(1, n) * T(a, n)


@settings(max_examples=40, deadline=None)
@given(ghosts(4), ghosts(4), ghosts(4))
def test_ring_laws(x, y, z):
    assert x + y == y + x and x * y == y * x
    assert (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + bw.zero(4) == x and x * bw.one(4) == x
    assert x - x == bw.zero(4)


def test_mismatched_truncations():
    with pytest.raises(ValueError):
        bw.add(bw.zero(2), bw.zero(3))


def test_frobenius():
    x = bw.from_ghost([1, 2, 3, 4, 5, 6])
    assert bw.ghost(bw.frobenius(2, bw.from_ghost([1, 2, 3, 4]))) == (2, 4)
    assert bw.frobenius(1, x) == x
    assert bw.frobenius(2, bw.frobenius(3, x)) == bw.frobenius(6, x)
    with pytest.raises(CapacityError):
        bw.frobenius(7, x)


def test_action():
    x = bw.from_ghost([2, 3, -1, 5, 7, 1])
    assert bw.apply_symfunc(SymFunc.power_sum((1,)), x) == x
    a = Fraction(3, 2)
    out = bw.apply_symfunc(d_p(2), bw.teichmuller(a, 6))
    assert out == bw.zero(out.truncation)
    f, g = from_basis("h", (2,)), from_basis("s", (2, 1))
    assert bw.apply_symfunc(f * g, x) == bw.apply_symfunc(f, x, 2) * bw.apply_symfunc(g, x, 2)
    assert bw.apply_symfunc(f + g, x) == bw.apply_symfunc(f, x, 2) + bw.apply_symfunc(g, x, 2)


def test_omega_twist():
    x = bw.from_ghost([2, 3, -1, 5])
    assert bw.omega_twist(bw.omega_twist(x)) == x
    assert bw.value_after_omega(x, from_basis("h", (3,))) == bw.value_at(x, from_basis("e", (3,)))


def test_membership_examples():
    two = bw.teichmuller(1, 4) + bw.teichmuller(1, 4)
    assert bw.ghost(two) == (2, 2, 2, 2)
    assert bw.member_W(two, Domain.NAT).ok
    values = sorted(bw.value_at(two, from_basis("m", lam)) for n in range(1, 5) for lam in partitions_of(n))
    assert values == sorted([2, 2, 2, 2, 1, 2, 0, 2, 1, 0, 0])
    anti = bw.anti_teichmuller(1, 4)
    assert bw.member_WSch(anti, Domain.NAT).ok
    v = bw.member_W(anti, Domain.NAT)
    assert not v.ok and v.witness == (2,) and v.value == -1
    for a in (0, 1, 3):
        t = bw.teichmuller(a, 4)
        assert bw.member_W(t, Domain.NAT).ok and bw.member_WSch(t, Domain.NAT).ok


def test_membership_domains():
    x = bw.from_ghost([Fraction(1, 2), Fraction(1, 4)])  # [1/2]
    assert bw.member_W(x, Domain.NONNEG_RAT).ok
    assert not bw.member_W(x, Domain.INT).ok
    assert bw.member_W(x, Domain.RAT).ok
    assert Domain.parse("Q+") is Domain.NONNEG_RAT
    with pytest.raises(ValueError):
        Domain.parse("reals")


def test_effectivity_expressions():
    a1, a2 = sympy.symbols("a1 a2")
    exprs = lambda tag, n: {sympy.expand(e) for _, e in bw.effectivity_expressions(tag, n)}
    assert exprs("m", 2) == {a1, a2, sympy.expand((a1**2 - a2) / 2)}
    assert exprs("s", 2) == {a1, sympy.expand((a1**2 + a2) / 2), sympy.expand((a1**2 - a2) / 2)}
    assert exprs("s", 1) == {a1}
    s = bw.ghost_symbols(4)
    m4 = exprs("m", 4)
    assert sympy.expand((s[0] ** 4 - 6 * s[0] ** 2 * s[1] + 3 * s[1] ** 2 + 8 * s[0] * s[2] - 6 * s[3]) / 24) in m4
    s4 = exprs("s", 4)
    for sgn in (1, -1):
        assert sympy.expand((s[0] ** 3 + sgn * 3 * s[0] * s[1] + 2 * s[2]) / 6) in s4
    assert len(m4) == 11


@settings(max_examples=30, deadline=None)
@given(ghosts(4))
def test_json_round_trip(x):
    assert bw.from_json(bw.to_json(x)) == x
    assert bw.from_json({"series": [str(c) for c in bw.to_series(x, "+-")], "normalization": "+-"}) == x
    assert bw.from_json({"witt": [str(c) for c in bw.witt_coords(x)]}) == x
