"""Slow, independent reference implementations.

These expand symmetric functions as honest polynomials in finitely many
variables and never touch the power-sum machinery of :mod:`witt_forge.symfunc`
(except where noted), so agreement with the fast paths is meaningful. They are
only practical at low degree.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations

from .partitions import _partitions_tuple

Poly = dict  # exponent tuple -> Fraction


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _poly_add(a: Poly, b: Poly, scale=1) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + scale * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _one(nvars: int) -> Poly:
    return {(0,) * nvars: Fraction(1)}


def _unit(nvars: int, i: int, power: int = 1) -> tuple:
    return tuple(power if j == i else 0 for j in range(nvars))


def _poly_pow(a: Poly, k: int, nvars: int) -> Poly:
    out = _one(nvars)
    for _ in range(k):
        out = _poly_mul(out, a)
    return out


@lru_cache(maxsize=None)
def monomial_poly(lam: tuple, nvars: int) -> Poly:
    """``m_lam`` in ``nvars`` variables: sum over distinct rearrangements."""
    if len(lam) > nvars:
        return {}
    padded = tuple(lam) + (0,) * (nvars - len(lam))
    return {e: Fraction(1) for e in set(permutations(padded))}


@lru_cache(maxsize=None)
def elementary_poly(n: int, nvars: int) -> Poly:
    if n == 0:
        return _one(nvars)
    out: Poly = {}
    for idx in combinations(range(nvars), n):
        out[tuple(1 if j in idx else 0 for j in range(nvars))] = Fraction(1)
    return out


@lru_cache(maxsize=None)
def complete_poly(n: int, nvars: int) -> Poly:
    if n == 0:
        return _one(nvars)
    out: Poly = {}
    for idx in combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for j in idx:
            e[j] += 1
        out[tuple(e)] = Fraction(1)
    return out


@lru_cache(maxsize=None)
def power_poly(n: int, nvars: int) -> Poly:
    if n == 0:
        return {(0,) * nvars: Fraction(nvars)}
    return {_unit(nvars, i, n): Fraction(1) for i in range(nvars)}


@lru_cache(maxsize=None)
def theta_poly(n: int, nvars: int) -> Poly:
    # p_n = sum_{d | n} d theta_d^(n/d), solved for theta_n
    acc = dict(power_poly(n, nvars))
    for d in range(1, n):
        if n % d == 0:
            acc = _poly_add(acc, _poly_pow(theta_poly(d, nvars), n // d, nvars), -d)
    return {e: c / n for e, c in acc.items()}


def _det_poly(mat, nvars: int) -> Poly:
    # Laplace expansion; fine for the small Jacobi-Trudi matrices used here
    size = len(mat)
    if size == 0:
        return _one(nvars)
    if size == 1:
        return dict(mat[0][0])
    out: Poly = {}
    for j in range(size):
        if not mat[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = _poly_mul(mat[0][j], _det_poly(minor, nvars))
        out = _poly_add(out, term, 1 if j % 2 == 0 else -1)
    return out


@lru_cache(maxsize=None)
def schur_poly(lam: tuple, nvars: int) -> Poly:
    """Jacobi-Trudi: ``s_lam = det(h_{lam_i - i + j})``."""
    ell = len(lam)
    mat = [
        [complete_poly(lam[i] - i + j, nvars) if lam[i] - i + j >= 0 else {} for j in range(ell)]
        for i in range(ell)
    ]
    return _det_poly(mat, nvars)


def basis_poly(tag: str, lam, nvars: int) -> Poly:
    lam = tuple(lam)
    if tag == "m":
        return dict(monomial_poly(lam, nvars))
    if tag == "s":
        return dict(schur_poly(lam, nvars))
    gen = {"e": elementary_poly, "h": complete_poly, "p": power_poly, "w": theta_poly}[tag]
    out = _one(nvars)
    for part in lam:
        out = _poly_mul(out, gen(part, nvars))
    return out


def monomial_coeffs_of_poly(poly: Poly, degree: int) -> dict:
    """Read off ``m_lam`` coefficients of a symmetric polynomial (``lam`` of length <= nvars)."""
    out = {}
    nvars = len(next(iter(poly))) if poly else 0
    for lam in _partitions_tuple(degree):
        if len(lam) > nvars:
            continue
        key = tuple(lam) + (0,) * (nvars - len(lam))
        c = poly.get(key, 0)
        if c:
            out[lam] = Fraction(c)
    return out


def product_monomial_coeffs(factors, degree: int) -> dict:
    """``m``-coefficients of a product of basis elements ``[(tag, lam), ...]``."""
    nvars = max(degree, 1)
    poly = _one(nvars)
    for tag, lam in factors:
        poly = _poly_mul(poly, basis_poly(tag, lam, nvars))
    return monomial_coeffs_of_poly(poly, degree)


def plethysm_by_substitution(f, g_poly: Poly, degree: int) -> dict:
    """``f o g`` for ``g`` with nonnegative integer coefficients.

    ``g`` is written as a sum of monomials ``y_1 + y_2 + ...`` (a coefficient
    ``c`` contributes ``c`` copies) and ``f`` is evaluated at those monomials,
    using ``p_k(y) = sum_j y_j^k``. ``f`` is a :class:`SymFunc`; only its
    power-sum coefficients are used. Returns the ``m``-coefficients in degree
    ``degree``.
    """
    if not g_poly:
        raise ValueError("g must be nonzero")
    nvars = len(next(iter(g_poly)))
    ys = []
    for e, c in g_poly.items():
        if c < 0 or Fraction(c).denominator != 1:
            raise ValueError("substitution rule needs nonnegative integer coefficients")
        ys.extend([e] * int(c))

    @lru_cache(maxsize=None)
    def pk(k):
        out: Poly = {}
        for e in ys:
            key = tuple(k * x for x in e)
            out[key] = out.get(key, 0) + Fraction(1)
        return out

    total: Poly = {}
    for mu, c in f.coeffs.items():
        term = _one(nvars)
        for part in mu:
            term = _poly_mul(term, pk(part))
        total = _poly_add(total, term, c)
    homogeneous = {e: c for e, c in total.items() if sum(e) == degree}
    return monomial_coeffs_of_poly(homogeneous, degree)


def character_mn(lam: tuple, mu: tuple) -> int:
    """Murnaghan-Nakayama by direct rim-hook removal on the diagram (scalar recursion)."""
    lam = tuple(x for x in lam if x)
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    total = 0
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((bset - {b}) | {nb}, reverse=True)
        new_lam = tuple(new_beta[j] - (ell - 1 - j) for j in range(ell))
        total += (-1) ** height * character_mn(new_lam, rest)
    return total
