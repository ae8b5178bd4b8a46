"""Exact symmetric functions, stored in the power-sum basis.

A :class:`SymFunc` is a sparse map ``partition -> Fraction`` meaning
``sum c_mu * p_mu`` with ``p_mu = p_{mu_1} p_{mu_2} ...``. In this basis the
product is concatenation of partitions, plethysm by ``p_n`` scales indices,
and both coproducts act monomial by monomial. Every other basis (monomial,
elementary, complete, Schur, Witt) is reached by conversion:

* Schur coefficients come from character columns (Murnaghan-Nakayama);
* monomial coefficients from the dual pairing with complete functions,
  computed as integer columns by :mod:`witt_forge._kernels`;
* ``h``, ``e`` and Witt (``w``) coefficients by rewriting each ``p_n`` as a
  polynomial in the generators (Newton's identities, resp. the Witt relation).
"""
from __future__ import annotations

import json
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from ._kernels import ColumnBuilder
from .partitions import (
    DEFAULT_DEGREE_BOUND,
    CapacityError,
    Partition,
    _partitions_tuple,
    conjugate,
    format_partition,
    merge,
    partitions_of,
    sign,
    z_factor,
)

BASES = ("m", "e", "h", "p", "s", "w")


def _canon(parts) -> tuple:
    parts = tuple(int(x) for x in parts if x)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        parts = tuple(sorted(parts, reverse=True))
    return parts


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c.strip())
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(c)


def _mul_dicts(a: dict, b: dict) -> dict:
    out: dict = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = merge(la, lb)
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _add_into(acc: dict, d: dict, scale=1):
    for k, v in d.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class SymFunc:
    """Symmetric function with exact rational coefficients in the p-basis."""

    __slots__ = ("coeffs", "degree_bound")

    def __init__(self, coeffs=None, degree_bound: int = DEFAULT_DEGREE_BOUND, *, truncate: bool = False):
        clean = {}
        for lam, c in (coeffs or {}).items():
            c = _frac(c)
            if not c:
                continue
            lam = _canon(lam)
            if sum(lam) > degree_bound:
                if truncate:
                    continue
                raise CapacityError(f"term p{format_partition(lam)} exceeds degree bound {degree_bound}")
            clean[lam] = clean.get(lam, 0) + c
            if not clean[lam]:
                del clean[lam]
        self.coeffs: dict[tuple, Fraction] = clean
        self.degree_bound = degree_bound

    # construction helpers
    @classmethod
    def constant(cls, c, degree_bound: int = DEFAULT_DEGREE_BOUND) -> "SymFunc":
        return cls({(): c}, degree_bound)

    @classmethod
    def power_sum(cls, parts, degree_bound: int = DEFAULT_DEGREE_BOUND) -> "SymFunc":
        return cls({tuple(parts): 1}, degree_bound)

    @property
    def degree(self) -> int:
        """Largest weight in the support (0 for constants and for zero)."""
        return max((sum(k) for k in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.coeffs}) <= 1

    def max_index(self) -> int:
        return max((k[0] for k in self.coeffs if k), default=0)

    def with_bound(self, degree_bound: int) -> "SymFunc":
        return SymFunc(self.coeffs, degree_bound)

    # ring structure
    def _bound(self, other) -> int:
        return max(self.degree_bound, getattr(other, "degree_bound", 0))

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.constant(other, self.degree_bound)
        out = dict(self.coeffs)
        _add_into(out, other.coeffs)
        return SymFunc(out, self._bound(other))

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({k: -v for k, v in self.coeffs.items()}, self.degree_bound)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = _frac(other)
        return SymFunc({k: c * v for k, v in self.coeffs.items()}, self.degree_bound)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / _frac(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not symmetric functions")
        result = SymFunc.constant(1, self.degree_bound)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, inner: "SymFunc") -> "SymFunc":
        return plethysm(self, inner)

    def __repr__(self):
        return f"SymFunc({format_symfunc(self, 'p')})"

    def __str__(self):
        return format_symfunc(self, "p")


# ---------------------------------------------------------------------------
# generators in the power-sum basis


@lru_cache(maxsize=None)
def _h_n(n: int) -> dict:
    return {mu: Fraction(1, z_factor(mu)) for mu in _partitions_tuple(n)}


@lru_cache(maxsize=None)
def _e_n(n: int) -> dict:
    return {mu: Fraction(sign(mu), z_factor(mu)) for mu in _partitions_tuple(n)}


_theta_lock = threading.Lock()


@lru_cache(maxsize=None)
def _theta_n(n: int) -> dict:
    # p_n = sum_{d | n} d * theta_d^{n/d}
    acc = {(n,): Fraction(1)}
    for d in range(1, n):
        if n % d:
            continue
        power = {(): Fraction(1)}
        td = _theta_n(d)
        for _ in range(n // d):
            power = _mul_dicts(power, td)
        _add_into(acc, power, -d)
    return {k: v / n for k, v in acc.items()}


def _generator(tag: str, n: int) -> dict:
    if n == 0:
        return {(): Fraction(1)}
    if tag == "h":
        return _h_n(n)
    if tag == "e":
        return _e_n(n)
    if tag == "w":
        with _theta_lock:
            return _theta_n(n)
    if tag == "p":
        return {(n,): Fraction(1)}
    raise ValueError(f"{tag!r} is not a multiplicative basis")


# p_n rewritten as a polynomial in the generators of a multiplicative basis;
# keys are partitions indexing products of generators.


@lru_cache(maxsize=None)
def _psi_in_generators(tag: str, n: int) -> dict:
    if tag == "h":
        # n h_n = sum_{i=1}^{n} p_i h_{n-i}
        acc = {(n,): Fraction(n)}
        for i in range(1, n):
            _add_into(acc, _mul_dicts(_psi_in_generators("h", i), {(n - i,): Fraction(1)}), -1)
        return acc
    if tag == "e":
        # n e_n = sum_{i=1}^{n} (-1)^{i-1} p_i e_{n-i}
        acc = {(n,): Fraction(n)}
        for i in range(1, n):
            _add_into(acc, _mul_dicts(_psi_in_generators("e", i), {(n - i,): Fraction(1)}), -((-1) ** (i - 1)))
        s = (-1) ** (n - 1)
        return {k: s * v for k, v in acc.items()}
    if tag == "w":
        acc: dict = {}
        for d in range(1, n + 1):
            if n % d == 0:
                acc[(d,) * (n // d)] = Fraction(d)
        return acc
    raise ValueError(f"no generator elimination for basis {tag!r}")


@lru_cache(maxsize=None)
def _psi_mu_in_generators(tag: str, mu: tuple) -> dict:
    if not mu:
        return {(): Fraction(1)}
    return _mul_dicts(_psi_mu_in_generators(tag, mu[1:]), _psi_in_generators(tag, mu[0]))


# ---------------------------------------------------------------------------
# Schur and monomial columns

SCHUR_COLUMNS = ColumnBuilder("s")
MONOMIAL_COLUMNS = ColumnBuilder("m")


def character(lam, mu) -> int:
    """Irreducible character value chi^lam at cycle type mu."""
    lam, mu = _canon(lam), _canon(mu)
    if sum(lam) != sum(mu):
        raise ValueError("character needs partitions of equal weight")
    col = SCHUR_COLUMNS.column(mu)
    return int(col[_index(lam)])


@lru_cache(maxsize=None)
def _index_map(n: int) -> dict:
    return {lam: i for i, lam in enumerate(_partitions_tuple(n))}


def _index(lam: tuple) -> int:
    return _index_map(sum(lam))[lam]


def _column_dict(builder: ColumnBuilder, mu: tuple) -> dict:
    col = builder.column(mu)
    parts = _partitions_tuple(sum(mu))
    return {parts[i]: int(v) for i, v in enumerate(col) if v}


def _psi_mu_to(tag: str, mu: tuple) -> dict:
    if tag == "p":
        return {mu: Fraction(1)}
    if tag == "s":
        return _column_dict(SCHUR_COLUMNS, mu)
    if tag == "m":
        return _column_dict(MONOMIAL_COLUMNS, mu)
    return _psi_mu_in_generators(tag, mu)


@lru_cache(maxsize=None)
def _schur_in_psi(n: int) -> dict:
    rows: dict = {lam: {} for lam in _partitions_tuple(n)}
    for mu in _partitions_tuple(n):
        z = z_factor(mu)
        for lam, chi in _column_dict(SCHUR_COLUMNS, mu).items():
            rows[lam][mu] = Fraction(chi, z)
    return rows


@lru_cache(maxsize=None)
def _monomial_in_psi(n: int) -> dict:
    # <m_lam, p_mu> = [h_lam] p_mu, and [p_mu] f = <f, p_mu> / z_mu
    rows: dict = {lam: {} for lam in _partitions_tuple(n)}
    for mu in _partitions_tuple(n):
        z = z_factor(mu)
        for lam, c in _psi_mu_in_generators("h", mu).items():
            rows[lam][mu] = c / z
    return rows


# ---------------------------------------------------------------------------
# public operations


def _check_tag(tag: str):
    if tag not in BASES:
        raise ValueError(f"unknown basis {tag!r}; expected one of {', '.join(BASES)}")


def from_basis(tag: str, lam, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """The basis element ``tag_lam`` as a :class:`SymFunc`.

    For the multiplicative bases (e, h, p, w) this is the product of the
    generators indexed by the parts of ``lam``.
    """
    _check_tag(tag)
    lam = _canon(lam)
    n = sum(lam)
    if n > degree_bound:
        raise CapacityError(f"{tag}{format_partition(lam)} has weight {n} > degree bound {degree_bound}")
    if tag == "s":
        return SymFunc(_schur_in_psi(n)[lam], degree_bound)
    if tag == "m":
        return SymFunc(_monomial_in_psi(n)[lam], degree_bound)
    acc = {(): Fraction(1)}
    for part in lam:
        acc = _mul_dicts(acc, _generator(tag, part))
    return SymFunc(acc, degree_bound)


def to_basis_coeffs(tag: str, f: SymFunc) -> dict:
    """Coefficients of ``f`` in basis ``tag`` as ``{partition: Fraction}``."""
    _check_tag(tag)
    if tag == "p":
        return dict(f.coeffs)
    out: dict = {}
    for mu, c in f.coeffs.items():
        _add_into(out, _psi_mu_to(tag, mu), c)
    return {Partition(k): Fraction(v) for k, v in _sorted_items(out)}


def _sorted_items(d: dict):
    return sorted(d.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    return f + g


def scale(c, f: SymFunc) -> SymFunc:
    return f * _frac(c)


def multiply(f: SymFunc, g: SymFunc, truncate: bool = False) -> SymFunc:
    """Product; raises :class:`CapacityError` past the degree bound unless ``truncate``."""
    bound = max(f.degree_bound, g.degree_bound)
    if not truncate and f.coeffs and g.coeffs and f.degree + g.degree > bound:
        raise CapacityError(f"product of degree {f.degree + g.degree} exceeds degree bound {bound}")
    out: dict = {}
    for la, ca in f.coeffs.items():
        wa = sum(la)
        for lb, cb in g.coeffs.items():
            if truncate and wa + sum(lb) > bound:
                continue
            key = merge(la, lb)
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return SymFunc(out, bound)


def scale_indices(g: SymFunc, n: int) -> SymFunc:
    """``p_n o g``: multiply every power-sum index of ``g`` by ``n``."""
    bound = g.degree_bound
    if n * g.degree > bound:
        raise CapacityError(f"p_{n} o g has degree {n * g.degree} > degree bound {bound}")
    return SymFunc({tuple(n * x for x in k): v for k, v in g.coeffs.items()}, bound)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """Composition ``f o g``.

    ``p_n o g`` scales the indices of ``g`` by ``n`` and ``f -> f o g`` is a
    ring map, so each ``p_mu`` of ``f`` becomes a product of scaled copies of
    ``g``. Rational constants are fixed by every ``p_n``.
    """
    bound = max(f.degree_bound, g.degree_bound)
    g = g.with_bound(bound) if g.degree_bound != bound else g
    if f.degree * g.degree > bound:
        raise CapacityError(f"plethysm degree {f.degree * g.degree} exceeds degree bound {bound}")
    scaled: dict[int, SymFunc] = {}
    products: dict[tuple, SymFunc] = {(): SymFunc.constant(1, bound)}

    def product_for(mu: tuple) -> SymFunc:
        hit = products.get(mu)
        if hit is None:
            k = mu[0]
            if k not in scaled:
                scaled[k] = scale_indices(g, k)
            hit = product_for(mu[1:]) * scaled[k]
            products[mu] = hit
        return hit

    out = SymFunc({}, bound)
    acc: dict = {}
    for mu, c in f.coeffs.items():
        _add_into(acc, product_for(mu).coeffs, c)
    out.coeffs = acc
    return out


def omega(f: SymFunc) -> SymFunc:
    """The involution with ``omega(p_n) = (-1)^(n+1) p_n``."""
    return SymFunc({k: sign(k) * v for k, v in f.coeffs.items()}, f.degree_bound)


def counit_add(f: SymFunc) -> Fraction:
    return f.coeffs.get((), Fraction(0))


def counit_mul(f: SymFunc) -> Fraction:
    return sum(f.coeffs.values(), Fraction(0))


def evaluate_at_scalar(f: SymFunc, a) -> Fraction:
    """Value under the trivial structure ``p_n -> a`` on the rationals."""
    a = _frac(a)
    return sum((c * a ** len(k) for k, c in f.coeffs.items()), Fraction(0))


def evaluate_finite(f: SymFunc, values) -> Fraction:
    """``f(x_1, ..., x_r, 0, 0, ...)``, i.e. ``p_n -> sum_i x_i^n``."""
    values = [_frac(v) for v in values]
    cache: dict[int, Fraction] = {}

    def pn(n):
        if n not in cache:
            cache[n] = sum((v**n for v in values), Fraction(0))
        return cache[n]

    total = Fraction(0)
    for k, c in f.coeffs.items():
        term = c
        for part in k:
            term *= pn(part)
        total += term
    return total


def theta(d: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """Witt symmetric function, from ``p_n = sum_{d|n} d theta_d^(n/d)``."""
    if d < 1:
        raise ValueError("theta_d needs d >= 1")
    return from_basis("w", (d,), degree_bound)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def d_p(p: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """``(p_1^p - p_p) / p`` for a prime ``p``."""
    if not _is_prime(p):
        raise ValueError(f"d_p needs a prime, got {p}")
    if p > degree_bound:
        raise CapacityError(f"d_{p} has degree {p} > degree bound {degree_bound}")
    return SymFunc({(1,) * p: Fraction(1, p), (p,): Fraction(-1, p)}, degree_bound)


def d_operator(n: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """``d_n = -theta_n`` for ``n >= 2``; agrees with :func:`d_p` at primes."""
    if n < 2:
        raise ValueError("d_n is defined for n >= 2")
    return -theta(n, degree_bound)


# ---------------------------------------------------------------------------
# positivity


@dataclass
class Verdict:
    """Yes/no answer with the first counterexample found, if any."""

    ok: bool
    witness: object = None
    value: object = None
    integral: bool = True
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _positivity(coeffs: dict) -> Verdict:
    witness = value = None
    for lam, c in coeffs.items():
        if c < 0:
            witness, value = lam, c
            break
    integral = all(c.denominator == 1 for c in coeffs.values())
    return Verdict(witness is None, witness, value, integral, {"coefficients": coeffs})


def is_monomial_positive(f: SymFunc) -> Verdict:
    return _positivity(to_basis_coeffs("m", f))


def is_schur_positive(f: SymFunc) -> Verdict:
    return _positivity(to_basis_coeffs("s", f))


# ---------------------------------------------------------------------------
# tensors and coproducts


class TensorSymFunc:
    """Element of Lambda (x) Lambda in the p (x) p basis."""

    __slots__ = ("coeffs", "degree_bound")

    def __init__(self, coeffs=None, degree_bound: int = DEFAULT_DEGREE_BOUND):
        clean: dict = {}
        for (a, b), c in (coeffs or {}).items():
            c = _frac(c)
            if not c:
                continue
            a, b = _canon(a), _canon(b)
            if sum(a) > degree_bound or sum(b) > degree_bound:
                raise CapacityError(f"tensor term exceeds degree bound {degree_bound}")
            v = clean.get((a, b), 0) + c
            if v:
                clean[(a, b)] = v
            else:
                clean.pop((a, b), None)
        self.coeffs = clean
        self.degree_bound = degree_bound

    @classmethod
    def pure(cls, f: SymFunc, g: SymFunc) -> "TensorSymFunc":
        bound = max(f.degree_bound, g.degree_bound)
        return cls({(a, b): ca * cb for a, ca in f.coeffs.items() for b, cb in g.coeffs.items()}, bound)

    def __add__(self, other):
        out = dict(self.coeffs)
        _add_into(out, other.coeffs)
        return TensorSymFunc(out, max(self.degree_bound, other.degree_bound))

    def __neg__(self):
        return TensorSymFunc({k: -v for k, v in self.coeffs.items()}, self.degree_bound)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorSymFunc):
            out: dict = {}
            for (a1, b1), c1 in self.coeffs.items():
                for (a2, b2), c2 in other.coeffs.items():
                    key = (merge(a1, a2), merge(b1, b2))
                    v = out.get(key, 0) + c1 * c2
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
            return TensorSymFunc(out, max(self.degree_bound, other.degree_bound))
        c = _frac(other)
        return TensorSymFunc({k: c * v for k, v in self.coeffs.items()}, self.degree_bound)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TensorSymFunc):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def swap(self) -> "TensorSymFunc":
        return TensorSymFunc({(b, a): c for (a, b), c in self.coeffs.items()}, self.degree_bound)

    def __repr__(self):
        terms = " + ".join(f"{c}*p{format_partition(a)}(x)p{format_partition(b)}" for (a, b), c in self.coeffs.items())
        return f"TensorSymFunc({terms or '0'})"


@lru_cache(maxsize=None)
def _delta_add_psi(mu: tuple) -> dict:
    # prod over parts of (p_k (x) 1 + 1 (x) p_k), grouped by multiplicity
    out = {((), ()): 1}
    i = 0
    while i < len(mu):
        v = mu[i]
        m = 1
        while i + m < len(mu) and mu[i + m] == v:
            m += 1
        factor = {((v,) * a, (v,) * (m - a)): comb(m, a) for a in range(m + 1)}
        new: dict = {}
        for (a1, b1), c1 in out.items():
            for (a2, b2), c2 in factor.items():
                key = (merge(a1, a2), merge(b1, b2))
                new[key] = new.get(key, 0) + c1 * c2
        out = new
        i += m
    return out


def coproduct_add(f: SymFunc) -> TensorSymFunc:
    """Co-addition: the ring map with ``p_n -> p_n (x) 1 + 1 (x) p_n``."""
    acc: dict = {}
    for mu, c in f.coeffs.items():
        _add_into(acc, _delta_add_psi(mu), c)
    return TensorSymFunc(acc, f.degree_bound)


def coproduct_mul(f: SymFunc) -> TensorSymFunc:
    """Co-multiplication: the ring map with ``p_n -> p_n (x) p_n``."""
    return TensorSymFunc({(mu, mu): c for mu, c in f.coeffs.items()}, f.degree_bound)


def tensor_to_basis_coeffs(T: TensorSymFunc, tag: str) -> dict:
    """Coefficients of ``T`` in ``tag (x) tag`` as ``{(lam, nu): Fraction}``."""
    _check_tag(tag)
    out: dict = {}
    for (a, b), c in T.coeffs.items():
        left = _psi_mu_to(tag, a)
        right = _psi_mu_to(tag, b)
        for la, ca in left.items():
            for lb, cb in right.items():
                key = (la, lb)
                v = out.get(key, 0) + c * ca * cb
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    items = sorted(out.items(), key=lambda kv: (sum(kv[0][0]), tuple(-x for x in kv[0][0]), sum(kv[0][1]), tuple(-x for x in kv[0][1])))
    return {(Partition(a), Partition(b)): Fraction(v) for (a, b), v in items}


def tensor_positivity(T: TensorSymFunc, tag: str) -> Verdict:
    return _positivity(tensor_to_basis_coeffs(T, tag))


def apply_counit_left(T: TensorSymFunc, counit) -> SymFunc:
    """``(counit (x) id)(T)`` for ``counit`` in {counit_add, counit_mul}."""
    acc: dict = {}
    for (a, b), c in T.coeffs.items():
        v = counit(SymFunc({a: 1}, T.degree_bound)) * c
        if v:
            _add_into(acc, {b: v})
    return SymFunc(acc, T.degree_bound)


# ---------------------------------------------------------------------------
# text and JSON formats

_TERM = re.compile(
    r"""^\s*(?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?:(?P<basis>[mehpsw])\s*\[(?P<parts>[\d,\s]*)\])?\s*$""",
    re.VERBOSE,
)


def _split_terms(text: str):
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    terms = []
    sign_ = 1
    buf = ""
    depth = 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0:
            if buf.strip():
                terms.append((sign_, buf))
                sign_ = 1
            buf = ""
            # consecutive signs multiply: "a - -b" is "a + b"
            sign_ = sign_ * (-1 if ch == "-" else 1)
            continue
        buf += ch
    if not buf.strip():
        raise ValueError(f"dangling operator in {text!r}")
    terms.append((sign_, buf))
    return terms


def parse_terms(text: str) -> dict:
    """Parse the text grammar into ``{(tag, partition): coefficient}`` without converting.

    Bare rational terms are returned under the tag ``""`` and the empty partition.
    """
    out: dict = {}
    for sgn, body in _split_terms(text):
        match = _TERM.match(body)
        if not match or (match.group("coef") is None and match.group("basis") is None):
            raise ValueError(f"cannot parse term {body.strip()!r}")
        coef = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
        if match.group("basis") is None:
            if match.group("star"):
                raise ValueError(f"cannot parse term {body.strip()!r}")
            key = ("", ())
        else:
            if match.group("coef") and not match.group("star"):
                raise ValueError(f"missing '*' in term {body.strip()!r}")
            raw = match.group("parts").strip()
            parts = [int(x) for x in raw.split(",")] if raw else []
            if any(x <= 0 for x in parts):
                raise ValueError(f"partition parts must be positive in {body.strip()!r}")
            key = (match.group("basis"), Partition(parts))
        v = out.get(key, 0) + sgn * coef
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def parse_symfunc(text: str, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    """Parse ``3*m[2,1] - 1/2*p[3] + s[1,1]`` (bases may be mixed)."""
    total = SymFunc({}, degree_bound)
    for (tag, lam), coef in parse_terms(text).items():
        if tag == "":
            total = total + SymFunc.constant(coef, degree_bound)
        else:
            total = total + from_basis(tag, lam, degree_bound) * coef
    return total


def _format_coeffs(coeffs: dict, tag: str) -> str:
    if not coeffs:
        return "0"
    pieces = []
    for lam, c in _sorted_items(coeffs):
        neg = c < 0
        a = -c if neg else c
        if lam == ():
            body = str(a)
        elif a == 1:
            body = f"{tag}{format_partition(lam)}"
        else:
            body = f"{a}*{tag}{format_partition(lam)}"
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def format_symfunc(f: SymFunc, tag: str = "p") -> str:
    return _format_coeffs(to_basis_coeffs(tag, f), tag)


def to_json(f: SymFunc, tag: str = "p") -> dict:
    coeffs = to_basis_coeffs(tag, f)
    return {
        "basis": tag,
        "terms": [{"partition": list(lam), "coef": str(c)} for lam, c in _sorted_items(coeffs)],
    }


def from_json(obj, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFunc:
    if isinstance(obj, str):
        obj = json.loads(obj)
    tag = obj["basis"]
    _check_tag(tag)
    total = SymFunc({}, degree_bound)
    for term in obj["terms"]:
        coef = _frac(str(term["coef"]))
        total = total + from_basis(tag, sorted(term["partition"], reverse=True), degree_bound) * coef
    return total


def basis_element_count(n: int) -> int:
    return len(partitions_of(n))


def transition_matrix(tag_from: str, tag_to: str, n: int) -> tuple[list, np.ndarray]:
    """Dense degree-``n`` transition matrix (rows: ``tag_from``, cols: ``tag_to``)."""
    parts = _partitions_tuple(n)
    mat = np.empty((len(parts), len(parts)), dtype=object)
    for i, lam in enumerate(parts):
        row = to_basis_coeffs(tag_to, from_basis(tag_from, lam, max(n, 1)))
        for j, mu in enumerate(parts):
            mat[i, j] = row.get(mu, Fraction(0))
    return list(parts), mat


def conjugate_partition(lam) -> Partition:
    return Partition(conjugate(_canon(lam)))
