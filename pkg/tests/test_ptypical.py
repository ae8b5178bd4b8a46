from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from witt_forge import ptypical as pt
from witt_forge.bigwitt import Domain
from witt_forge.symfunc import SymFunc, d_p, from_basis, plethysm, to_basis_coeffs

q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def G(p, *comps):
    return pt.PTypGhost(p, len(comps) - 1, tuple(Fraction(c) for c in comps))


def test_generators():
    assert pt.generator_symfunc(2, 0, 0) == SymFunc.power_sum((1,))
    d2 = pt.generator_symfunc(2, 0, 1)
    assert d2 == d_p(2)
    assert {tuple(k): v for k, v in to_basis_coeffs("m", d2).items()} == {(1, 1): 1}
    psi = SymFunc.power_sum
    assert pt.generator_symfunc(2, 1, 1) == (psi((2, 2)) - psi((4,))) / 2
    assert pt.generator_symfunc(3, 0, 2) == plethysm(d_p(3), d_p(3))


def test_grid_examples():
    w = pt.ghost_to_grid(G(2, 1, Fraction(1, 2), Fraction(1, 8)))
    assert (w[(0, 1)], w[(1, 1)], w[(0, 2)]) == (Fraction(1, 4), Fraction(1, 16), 0)
    assert w.in_domain(Domain.NONNEG_RAT)
    for p in (2, 3):
        a = Fraction(3, 2)
        w = pt.ghost_to_grid(pt.teichmuller(a, p, 2))
        assert all(v == 0 for (i, j), v in w.grid.items() if j >= 1)
        assert pt.grid_to_ghost(w).components == (a, a**p, a ** (p * p))
    assert all(v == 0 for v in pt.ghost_to_grid(G(2, 0, 0, 0)).grid.values())


def test_one_in_grid_coordinates():
    for p in (2, 3, 5):
        one = pt.PTypWitt(p, 1, {(0, 0): 1, (1, 0): 1, (0, 1): 0})
        assert pt.grid_to_ghost(one).components == (1, 1)


def test_invalid_grid():
    bad = pt.PTypWitt(2, 1, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    with pytest.raises(pt.InvalidGridError):
        pt.grid_to_ghost(bad)
    with pytest.raises(ValueError):
        pt.PTypWitt(2, 1, {(0, 0): 1})
    with pytest.raises(ValueError):
        pt.PTypGhost(4, 1, (1, 1))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 3), st.data())
def test_grid_round_trip(p, k, data):
    g = pt.PTypGhost(p, k, tuple(data.draw(q) for _ in range(k + 1)))
    w = pt.ghost_to_grid(g)
    assert not w.relation_defects()
    assert pt.grid_to_ghost(w) == g


def test_k1_sum_example():
    one = pt.PTypWitt(2, 1, {(0, 0): 1, (1, 0): 1, (0, 1): 0})
    s = pt.add(one, one)
    assert (s[(0, 0)], s[(1, 0)], s[(0, 1)]) == (2, 2, 1)
    assert pt.k1_grid_add(2, (1, 1, 0), (1, 1, 0)) == (2, 2, 1)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), q, q, q, q)
def test_k1_closed_formulas(p, a00, a01, b00, b01):
    a = (a00, a00**p - p * a01, a01)
    b = (b00, b00**p - p * b01, b01)
    wa = pt.PTypWitt(p, 1, {(0, 0): a[0], (1, 0): a[1], (0, 1): a[2]})
    wb = pt.PTypWitt(p, 1, {(0, 0): b[0], (1, 0): b[1], (0, 1): b[2]})
    s, m = pt.add(wa, wb), pt.mul(wa, wb)
    assert (s[(0, 0)], s[(1, 0)], s[(0, 1)]) == pt.k1_grid_add(p, a, b)
    assert (m[(0, 0)], m[(1, 0)], m[(0, 1)]) == pt.k1_grid_mul(p, a, b)
    ta, tb = pt.grid_to_theta(wa), pt.grid_to_theta(wb)
    assert pt.grid_to_theta(s) == pt.k1_theta_add(p, ta, tb)
    assert pt.grid_to_theta(m) == pt.k1_theta_mul(p, ta, tb)


def test_theta_coordinates_zero_one():
    for p in (2, 3, 5):
        assert pt.grid_to_ghost(pt.theta_to_grid(p, (0, 0))).components == (0, 0)
        assert pt.grid_to_ghost(pt.theta_to_grid(p, (1, 0))).components == (1, 1)


def test_add_zero():
    w = pt.ghost_to_grid(G(3, 2, 5, -1))
    assert pt.add(w, G(3, 0, 0, 0)) == w


def test_membership():
    assert pt.member(pt.teichmuller(4, 2, 2), Domain.NAT).ok
    v = pt.member(G(2, 0, 1, 0), Domain.NAT)
    assert not v.ok and v.witness == (0, 1) and v.value == Fraction(-1, 2)
    for y, want in [(Fraction(1, 8), True), (Fraction(1, 4), True), (Fraction(1, 5), True), (Fraction(1, 9), False), (Fraction(3, 10), False)]:
        assert pt.member(G(2, 1, Fraction(1, 2), y), Domain.NONNEG_RAT).ok is want


def test_region_examples():
    h = Fraction(1, 2)
    assert pt.region_check_k2(2, 1, h, Fraction(1, 8))
    assert pt.region_check_k2(2, 1, h, Fraction(1, 4))
    assert not pt.region_check_k2(2, 1, h, Fraction(3, 10))


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([2, 3]),
    st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4),
    st.fractions(min_value=-1, max_value=2, max_denominator=6),
    st.fractions(min_value=-1, max_value=2, max_denominator=12),
)
def test_region_matches_grid_membership(p, a, x, y):
    assert pt.region_check_k2(p, a, x, y) == pt.member(pt.region_ghost(p, a, x, y), Domain.NONNEG_RAT).ok


def test_basis_monomials():
    monos = pt.basis_monomials(2, 1, 4)
    assert all(set(e) <= {(0, 0), (1, 0), (0, 1)} and e.get((0, 0), 0) <= 1 for e, _ in monos)
    assert len(monos) == sum(pt._ptypical_dimension(2, 1, n) for n in range(5))
    zero = pt.basis_monomials(2, 0, 5)
    assert [f for _, f in zero] == [SymFunc.power_sum((1,) * n) for n in range(6)]
    for p, k in [(2, 1), (2, 2), (3, 1)]:
        assert pt.interior_monomial_count(p, k) == p ** (k * (k + 1) // 2)


@pytest.mark.parametrize("p,k,deg", [(2, 1, 4), (2, 2, 8), (3, 1, 9)])
def test_basis_lemma(p, k, deg):
    rep = pt.verify_basis_lemma(p, k, deg)
    assert rep.independent and rep.spanning
    assert rep.to_dict()["per_degree"][deg]["rank"] == pt._ptypical_dimension(p, k, deg)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_dp_coproducts(p):
    rep = pt.dp_coproduct_check(p)
    assert rep["ok"] and rep["coefficients_nonnegative_integral"]
    if p == 2:
        assert rep["middle_coefficients"] == ["1"]
    if p == 3:
        assert rep["middle_coefficients"] == ["1", "1"]
    if p == 5:
        assert rep["middle_coefficients"] == ["1", "2", "2", "1"]


def test_json_round_trip():
    g = G(3, 1, Fraction(2, 3), -4)
    assert pt.from_json(pt.to_json(g)) == g
    assert pt.from_json(pt.to_json(pt.ghost_to_grid(g))) == g
