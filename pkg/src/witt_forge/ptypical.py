"""p-typical symmetric functions and the Witt vectors ``W_(p),k``.

The ring ``Lambda_(p),k`` is generated by the compositions
``x_ij = p_p^{o i} o d_p^{o j}`` (``i + j <= k``) subject to
``x_ij^p = x_{i+1,j} + p x_{i,j+1}``. A point of ``W_(p),k(A)`` is the grid of
values ``a_ij = x(x_ij)``; its ghost components are the first column
``a_i0 = x(p_{p^i})``. Over a ring containing ``1/p`` the grid is recovered
from the ghost by ``u_{i,j+1} = (u_ij^p - u_{i+1,j}) / p``, which is what all
arithmetic here goes through.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .bigwitt import Domain
from .partitions import DEFAULT_DEGREE_BOUND, CapacityError
from .symfunc import (
    SymFunc,
    TensorSymFunc,
    Verdict,
    _frac,
    _is_prime,
    coproduct_add,
    coproduct_mul,
    d_p,
    plethysm,
    scale_indices,
)


class InvalidGridError(ValueError):
    """A grid violates ``a_ij^p = a_{i+1,j} + p a_{i,j+1}``."""


def _check_prime(p: int):
    if not _is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


@dataclass(frozen=True)
class PTypGhost:
    p: int
    k: int
    components: tuple

    def __post_init__(self):
        _check_prime(self.p)
        comps = tuple(_frac(c) for c in self.components)
        if len(comps) != self.k + 1:
            raise ValueError(f"level {self.k} needs {self.k + 1} ghost components, got {len(comps)}")
        object.__setattr__(self, "components", comps)


@dataclass(frozen=True)
class PTypWitt:
    p: int
    k: int
    grid: dict = field(hash=False)
    domain: Domain | None = None

    def __post_init__(self):
        _check_prime(self.p)
        grid = {(int(i), int(j)): _frac(v) for (i, j), v in self.grid.items()}
        need = {(i, j) for i in range(self.k + 1) for j in range(self.k + 1 - i)}
        if set(grid) != need:
            raise ValueError(f"grid for level {self.k} must have entries exactly at i + j <= {self.k}")
        object.__setattr__(self, "grid", grid)

    def __getitem__(self, ij):
        return self.grid[ij]

    def relation_defects(self) -> dict:
        p = self.p
        out = {}
        for (i, j), v in self.grid.items():
            if i + j < self.k:
                d = v**p - self.grid[(i + 1, j)] - p * self.grid[(i, j + 1)]
                if d:
                    out[(i, j)] = d
        return out

    def in_domain(self, dom: Domain) -> bool:
        return all(dom.contains(v) for v in self.grid.values())


def generator_symfunc(p: int, i: int, j: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """``p_p^{o i} o d_p^{o j}``, a symmetric function of degree ``p^(i+j)``."""
    _check_prime(p)
    if p ** (i + j) > degree_bound:
        raise CapacityError(f"generator ({i},{j}) has degree {p ** (i + j)} > degree bound {degree_bound}")
    g = SymFunc.power_sum((1,), degree_bound)
    dp = d_p(p, degree_bound)
    for _ in range(j):
        g = plethysm(dp, g)
    for _ in range(i):
        g = scale_indices(g, p)
    return g


def ghost_to_grid(g: PTypGhost, domain: Domain | None = None) -> PTypWitt:
    p, k = g.p, g.k
    col = list(g.components)
    grid = {(i, 0): col[i] for i in range(k + 1)}
    for j in range(k):
        nxt = [(col[i] ** p - col[i + 1]) / p for i in range(len(col) - 1)]
        for i, v in enumerate(nxt):
            grid[(i, j + 1)] = v
        col = nxt
    return PTypWitt(p, k, grid, domain)


def grid_to_ghost(w: PTypWitt) -> PTypGhost:
    bad = w.relation_defects()
    if bad:
        (i, j), d = sorted(bad.items())[0]
        raise InvalidGridError(f"relation at ({i},{j}) fails: a_ij^p - a_(i+1)j - p a_i(j+1) = {d}")
    return PTypGhost(w.p, w.k, tuple(w.grid[(i, 0)] for i in range(w.k + 1)))


def _as_ghost(x) -> PTypGhost:
    return grid_to_ghost(x) if isinstance(x, PTypWitt) else x


def _binary(x, y, op) -> PTypWitt:
    gx, gy = _as_ghost(x), _as_ghost(y)
    if (gx.p, gx.k) != (gy.p, gy.k):
        raise ValueError(f"mismatched (p, k): {(gx.p, gx.k)} vs {(gy.p, gy.k)}")
    comps = tuple(op(a, b) for a, b in zip(gx.components, gy.components))
    return ghost_to_grid(PTypGhost(gx.p, gx.k, comps))


def add(x, y) -> PTypWitt:
    return _binary(x, y, lambda a, b: a + b)


def mul(x, y) -> PTypWitt:
    return _binary(x, y, lambda a, b: a * b)


def teichmuller(a, p: int, k: int) -> PTypGhost:
    a = _frac(a)
    return PTypGhost(p, k, tuple(a ** (p**i) for i in range(k + 1)))


def member(g, dom: Domain) -> Verdict:
    """All grid entries of ``g`` in ``dom``; witness is the first failing ``(i, j)``."""
    w = ghost_to_grid(_as_ghost(g))
    for j in range(w.k + 1):
        for i in range(w.k + 1 - j):
            v = w.grid[(i, j)]
            if not dom.contains(v):
                return Verdict(False, (i, j), v, v.denominator == 1, {"grid": w.grid})
    return Verdict(True, None, None, all(v.denominator == 1 for v in w.grid.values()), {"grid": w.grid})


def region_ghost(p: int, a, x, y) -> PTypGhost:
    a, x, y = _frac(a), _frac(x), _frac(y)
    return PTypGhost(p, 2, (a, a**p * x, a ** (p * p) * y))


def region_check_k2(p: int, a, x, y) -> bool:
    """Closed description of ``W_(p),2(Q+)`` at ghost ``<a, a^p x, a^(p^2) y>``, ``a > 0``.

    ``x, y >= 0`` come from the ghost entries themselves; the rest is the
    region ``x <= 1``, ``0 <= x^p - y <= (1 - x)^p / p^(p-1)``.
    """
    _check_prime(p)
    a, x, y = _frac(a), _frac(x), _frac(y)
    if a <= 0:
        raise ValueError("region check needs a > 0")
    if x < 0 or y < 0 or x > 1:
        return False
    gap = x**p - y
    return 0 <= gap <= (1 - x) ** p / Fraction(p ** (p - 1))


# ---------------------------------------------------------------------------
# closed k = 1 laws, kept as independent oracles


def k1_grid_add(p: int, a, b) -> tuple:
    """``(a00, a10, a01) + (b00, b10, b01)`` in grid coordinates."""
    a00, a10, a01 = map(_frac, a)
    b00, b10, b01 = map(_frac, b)
    corr = sum((Fraction(comb(p, i), p) * a00**i * b00 ** (p - i) for i in range(1, p)), Fraction(0))
    return (a00 + b00, a10 + b10, a01 + b01 + corr)


def k1_grid_mul(p: int, a, b) -> tuple:
    a00, a10, a01 = map(_frac, a)
    b00, b10, b01 = map(_frac, b)
    return (a00 * b00, a10 * b10, a10 * b01 + a01 * b10 + p * a01 * b01)


def k1_theta_add(p: int, a, b) -> tuple:
    """Length-1 sum in theta coordinates ``(x(theta_1), x(theta_p))``."""
    a0, a1 = map(_frac, a)
    b0, b1 = map(_frac, b)
    corr = sum((Fraction(comb(p, i), p) * a0**i * b0 ** (p - i) for i in range(1, p)), Fraction(0))
    return (a0 + b0, a1 + b1 - corr)


def k1_theta_mul(p: int, a, b) -> tuple:
    a0, a1 = map(_frac, a)
    b0, b1 = map(_frac, b)
    return (a0 * b0, a0**p * b1 + a1 * b0**p + p * a1 * b1)


def theta_to_grid(p: int, t) -> PTypWitt:
    """``(theta_1, theta_p)`` values to the k = 1 grid, using ``d_p = -theta_p``."""
    t0, t1 = map(_frac, t)
    return PTypWitt(p, 1, {(0, 0): t0, (1, 0): t0**p + p * t1, (0, 1): -t1})


def grid_to_theta(w: PTypWitt) -> tuple:
    if w.k != 1:
        raise ValueError("theta coordinates are implemented for k = 1")
    return (w.grid[(0, 0)], -w.grid[(0, 1)])


# ---------------------------------------------------------------------------
# the basis lemma


def _generators(p: int, k: int, degree_bound: int):
    gens = []
    for s in range(k + 1):
        for i in range(s, -1, -1):
            j = s - i
            gens.append(((i, j), p**s))
    return gens


def basis_monomials(p: int, k: int, max_degree: int) -> list:
    """Monomials ``prod x_ij^{m_ij}`` with ``m_ij < p`` off the boundary ``i + j = k``.

    Returns ``(exponents, SymFunc)`` pairs of degree ``<= max_degree``;
    ``exponents`` maps ``(i, j)`` to a positive exponent.
    """
    _check_prime(p)
    bound = max(DEFAULT_DEGREE_BOUND, max_degree)
    gens = _generators(p, k, bound)
    out = []

    def rec(idx, remaining, exps):
        if idx == len(gens):
            out.append(dict(exps))
            return
        (i, j), deg = gens[idx]
        cap = remaining // deg
        if i + j < k:
            cap = min(cap, p - 1)
        for e in range(cap + 1):
            if e:
                exps[(i, j)] = e
            rec(idx + 1, remaining - e * deg, exps)
        exps.pop((i, j), None)

    rec(0, max_degree, {})
    cache: dict = {}
    result = []
    for exps in out:
        f = SymFunc.constant(1, bound)
        for (i, j), e in sorted(exps.items()):
            if (i, j) not in cache:
                cache[(i, j)] = generator_symfunc(p, i, j, bound)
            f = f * cache[(i, j)] ** e
        result.append((exps, f))
    result.sort(key=lambda pair: (pair[1].degree, sorted(pair[0].items())))
    return result


def interior_monomial_count(p: int, k: int) -> int:
    """Number of exponent grids with ``m_ij < p`` on every cell ``i + j < k``."""
    cells = sum(1 for i in range(k) for j in range(k - i))
    return p**cells


def _ptypical_dimension(p: int, k: int, n: int) -> int:
    # partitions of n with parts in {1, p, ..., p^k}
    parts = [p**i for i in range(k + 1)]
    ways = [1] + [0] * n
    for part in parts:
        for m in range(part, n + 1):
            ways[m] += ways[m - part]
    return ways[n]


@dataclass
class BasisReport:
    p: int
    k: int
    max_degree: int
    independent: bool
    spanning: bool
    per_degree: list

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "max_degree": self.max_degree,
            "independent": self.independent,
            "spanning": self.spanning,
            "per_degree": self.per_degree,
        }


def verify_basis_lemma(p: int, k: int, max_degree: int) -> BasisReport:
    """Exact rank of the power-sum coefficient matrix of the basis monomials.

    Monomials are homogeneous, so independence is checked degree by degree;
    the count is also compared with the dimension of ``Q[p_1, p_p, ..., p_{p^k}]``.
    """
    import sympy

    monos = basis_monomials(p, k, max_degree)
    rows = []
    independent = spanning = True
    for n in range(max_degree + 1):
        fs = [f for _, f in monos if f.degree == n and not (n == 0 and f.is_zero())]
        keys = sorted({mu for f in fs for mu in f.coeffs})
        rank = 0
        if fs:
            mat = sympy.Matrix([[sympy.Rational(str(f.coeffs.get(mu, 0))) for mu in keys] for f in fs])
            rank = mat.rank()
        dim = _ptypical_dimension(p, k, n)
        rows.append({"degree": n, "monomials": len(fs), "rank": rank, "dimension": dim})
        independent &= rank == len(fs)
        spanning &= rank == dim
    return BasisReport(p, k, max_degree, independent, spanning, rows)


# ---------------------------------------------------------------------------
# coproducts of d_p


def dp_coproduct_check(p: int) -> dict:
    """Compare both coproducts of ``d_p`` with their closed positive forms."""
    _check_prime(p)
    bound = max(DEFAULT_DEGREE_BOUND, p)
    dp = d_p(p, bound)
    one = SymFunc.constant(1, bound)
    e = SymFunc.power_sum((1,), bound)
    pp = SymFunc.power_sum((p,), bound)
    mids = [Fraction(comb(p, i), p) for i in range(1, p)]
    expected_add = TensorSymFunc.pure(dp, one) + TensorSymFunc.pure(one, dp)
    for i, c in zip(range(1, p), mids):
        expected_add = expected_add + TensorSymFunc.pure(e**i, e ** (p - i)) * c
    expected_mul = TensorSymFunc.pure(dp, pp) + TensorSymFunc.pure(pp, dp) + TensorSymFunc.pure(dp, dp) * p
    add_ok = coproduct_add(dp) == expected_add
    mul_ok = coproduct_mul(dp) == expected_mul
    coeffs = mids + [Fraction(p)]
    return {
        "p": p,
        "add_matches": add_ok,
        "mul_matches": mul_ok,
        "middle_coefficients": [str(c) for c in mids],
        "coefficients_nonnegative_integral": all(c >= 0 and c.denominator == 1 for c in coeffs),
        "ok": add_ok and mul_ok and all(c >= 0 for c in coeffs),
    }


# ---------------------------------------------------------------------------
# JSON


def to_json(x) -> dict:
    if isinstance(x, PTypGhost):
        return {"p": x.p, "k": x.k, "ghost": [str(c) for c in x.components]}
    return {
        "p": x.p,
        "k": x.k,
        "grid": {f"{i},{j}": str(v) for (i, j), v in sorted(x.grid.items(), key=lambda kv: (kv[0][1], kv[0][0]))},
    }


def from_json(obj) -> PTypGhost:
    """Parse ``{"p", "k", "ghost"}`` or ``{"p", "k", "grid"}`` into a ghost vector."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    p = int(obj["p"])
    if "ghost" in obj:
        comps = [_frac(str(c)) for c in obj["ghost"]]
        k = int(obj.get("k", len(comps) - 1))
        return PTypGhost(p, k, tuple(comps))
    if "grid" in obj:
        grid = {}
        for key, v in obj["grid"].items():
            i, j = (int(s) for s in key.split(","))
            grid[(i, j)] = _frac(str(v))
        k = int(obj.get("k", max(i + j for i, j in grid)))
        return grid_to_ghost(PTypWitt(p, k, grid))
    raise ValueError("p-typical JSON needs 'ghost' or 'grid'")
