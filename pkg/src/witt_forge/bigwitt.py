"""Truncated big Witt vectors with exact rational ghost components.

A Witt vector of truncation ``n`` is the ring map ``Lambda -> Q`` restricted to
weight ``<= n``. It is stored by its ghost components ``g_k = x(p_k)``; since
every symmetric function is a polynomial in the power sums, these determine
all other views (series, Witt coordinates, values on any basis). Membership
in ``W(A)`` / ``W^Sch(A)`` for a semiring ``A`` inside ``Q`` is then decided by
evaluating the monomial (resp. Schur) basis and testing each value.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .partitions import CapacityError, partitions_of
from .symfunc import SymFunc, Verdict, _frac, from_basis, omega, scale_indices


class Domain(Enum):
    """Coefficient semirings that embed in the rationals."""

    NAT = "nat"
    INT = "int"
    NONNEG_RAT = "qplus"
    RAT = "q"

    def contains(self, q) -> bool:
        q = _frac(q)
        if self is Domain.NAT:
            return q.denominator == 1 and q >= 0
        if self is Domain.INT:
            return q.denominator == 1
        if self is Domain.NONNEG_RAT:
            return q >= 0
        return True

    @classmethod
    def parse(cls, text: str) -> "Domain":
        key = text.strip().lower()
        aliases = {"n": "nat", "z": "int", "q+": "qplus", "qpos": "qplus", "rat": "q"}
        key = aliases.get(key, key)
        for dom in cls:
            if dom.value == key or dom.name.lower() == key:
                return dom
        raise ValueError(f"unknown domain {text!r}; expected nat, int, qplus or q")


# (eps1, eps2); the default (-1, -1) is the series sum x(h_i) t^i
NORMALIZATIONS = {"--": (-1, -1), "++": (1, 1), "+-": (1, -1), "-+": (-1, 1)}
CANONICAL = (-1, -1)


def parse_normalization(norm) -> tuple[int, int]:
    if isinstance(norm, str):
        if norm not in NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {', '.join(NORMALIZATIONS)}")
        return NORMALIZATIONS[norm]
    e1, e2 = norm
    if e1 not in (1, -1) or e2 not in (1, -1):
        raise ValueError("normalization signs must be +1 or -1")
    return (e1, e2)


@dataclass(frozen=True)
class WittVector:
    """Big Witt vector truncated at weight ``len(ghost)``."""

    ghost: tuple

    def __post_init__(self):
        object.__setattr__(self, "ghost", tuple(_frac(g) for g in self.ghost))
        if not self.ghost:
            raise ValueError("truncation must be at least 1")

    @property
    def truncation(self) -> int:
        return len(self.ghost)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return WittVector(tuple(-g for g in self.ghost))

    def __sub__(self, other):
        return add(self, -other)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.ghost) + ">"


def from_ghost(g) -> WittVector:
    return WittVector(tuple(g))


def ghost(x: WittVector) -> tuple:
    return x.ghost


def zero(n: int) -> WittVector:
    return WittVector((0,) * n)


def one(n: int) -> WittVector:
    return teichmuller(1, n)


def _check_same(x: WittVector, y: WittVector):
    if x.truncation != y.truncation:
        raise ValueError(f"truncations differ: {x.truncation} vs {y.truncation}")


def add(x: WittVector, y: WittVector) -> WittVector:
    _check_same(x, y)
    return WittVector(tuple(a + b for a, b in zip(x.ghost, y.ghost)))


def mul(x: WittVector, y: WittVector) -> WittVector:
    _check_same(x, y)
    return WittVector(tuple(a * b for a, b in zip(x.ghost, y.ghost)))


def value_at(x: WittVector, f: SymFunc) -> Fraction:
    """``x(f)``: substitute ``g_k`` for ``p_k`` in the power-sum form of ``f``.

    The truncated vector knows ``x(p_k)`` for ``k <= n``, so any ``f`` whose
    power-sum indices stay within ``n`` can be evaluated; in particular every
    ``f`` of degree ``<= n``.
    """
    n = x.truncation
    if f.max_index() > n:
        raise CapacityError(f"symmetric function uses p_{f.max_index()} but truncation is {n}")
    g = x.ghost
    total = Fraction(0)
    for mu, c in f.coeffs.items():
        term = c
        for part in mu:
            term *= g[part - 1]
        total += term
    return total


# ---------------------------------------------------------------------------
# series and Witt coordinates


def _e_values(g) -> list:
    # Newton: i e_i = sum_{j=1}^{i} (-1)^(j-1) g_j e_{i-j}
    e = [Fraction(1)]
    for i in range(1, len(g) + 1):
        s = sum(((-1) ** (j - 1) * g[j - 1] * e[i - j] for j in range(1, i + 1)), Fraction(0))
        e.append(s / i)
    return e


def _ghost_from_e(e) -> list:
    g = []
    for i in range(1, len(e)):
        s = i * e[i] - sum(((-1) ** (j - 1) * g[j - 1] * e[i - j] for j in range(1, i)), Fraction(0))
        g.append((-1) ** (i - 1) * s)
    return g


def series_inverse(a) -> list:
    """Inverse of ``1 + a_1 t + ...`` truncated to the same length."""
    a = [_frac(c) for c in a]
    if a[0] != 1:
        raise ValueError("series must have constant term 1")
    b = [Fraction(1)]
    for i in range(1, len(a)):
        b.append(-sum((a[j] * b[i - j] for j in range(1, i + 1)), Fraction(0)))
    return b


def series_product(a, b) -> list:
    n = min(len(a), len(b))
    return [sum((a[j] * b[i - j] for j in range(i + 1)), Fraction(0)) for i in range(n)]


def to_series(x: WittVector, norm=CANONICAL) -> list:
    """Coefficients ``[1, c_1, ..., c_n]`` of ``(sum x(e_i) (eps1 t)^i)^eps2``."""
    e1, e2 = parse_normalization(norm)
    e = _e_values(x.ghost)
    s = [c * e1**i for i, c in enumerate(e)]
    return series_inverse(s) if e2 == -1 else s


def from_series(coeffs, norm=CANONICAL) -> WittVector:
    """Inverse of :func:`to_series`; ``coeffs`` starts with the constant term 1."""
    e1, e2 = parse_normalization(norm)
    c = [_frac(v) for v in coeffs]
    if not c or c[0] != 1:
        raise ValueError("series must start with the constant term 1")
    if len(c) < 2:
        raise ValueError("series needs at least one non-constant coefficient")
    s = series_inverse(c) if e2 == -1 else c
    e = [v * e1**i for i, v in enumerate(s)]
    return WittVector(tuple(_ghost_from_e(e)))


def witt_coords(x: WittVector) -> list:
    """Values ``x(theta_1), ..., x(theta_n)``."""
    g = x.ghost
    t: list[Fraction] = []
    for n in range(1, len(g) + 1):
        s = g[n - 1] - sum((d * t[d - 1] ** (n // d) for d in range(1, n) if n % d == 0), Fraction(0))
        t.append(s / n)
    return t


def from_witt_coords(ts) -> WittVector:
    ts = [_frac(v) for v in ts]
    g = []
    for n in range(1, len(ts) + 1):
        g.append(sum((d * ts[d - 1] ** (n // d) for d in range(1, n + 1) if n % d == 0), Fraction(0)))
    return WittVector(tuple(g))


# ---------------------------------------------------------------------------
# distinguished vectors and operations


def teichmuller(a, n: int) -> WittVector:
    """``[a]``, with ghost ``<a, a^2, a^3, ...>``."""
    a = _frac(a)
    return WittVector(tuple(a**i for i in range(1, n + 1)))


def anti_teichmuller(a, n: int) -> WittVector:
    """``<a> = -[-a]``, with ghost ``<a, -a^2, a^3, ...>``."""
    a = _frac(a)
    return WittVector(tuple((-1) ** (i + 1) * a**i for i in range(1, n + 1)))


def xi(n: int) -> WittVector:
    """The vector with ghost ``<1, 0, 0, ...>``; its series is ``exp(t)``."""
    return WittVector((1,) + (0,) * (n - 1))


def frobenius(m: int, x: WittVector) -> WittVector:
    """``psi_m``: ghost components ``g_{m}, g_{2m}, ...``."""
    if m < 1:
        raise ValueError("Frobenius index must be positive")
    out_n = x.truncation // m
    if out_n < 1:
        raise CapacityError(f"frobenius({m}) needs truncation >= {m}, got {x.truncation}")
    return WittVector(tuple(x.ghost[m * i - 1] for i in range(1, out_n + 1)))


def apply_symfunc(f: SymFunc, x: WittVector, out_truncation: int | None = None) -> WittVector:
    """The action ``f(x)``, with ghost components ``x(p_m o f)``."""
    top = f.max_index()
    limit = x.truncation // top if top else x.truncation
    if out_truncation is None:
        out_truncation = limit
    if out_truncation < 1 or out_truncation > limit:
        raise CapacityError(
            f"output truncation {out_truncation} needs p-indices up to {out_truncation * top} > {x.truncation}"
        )
    wide = SymFunc(f.coeffs, max(f.degree_bound, f.degree * out_truncation))
    return WittVector(tuple(value_at(x, scale_indices(wide, m)) for m in range(1, out_truncation + 1)))


def omega_twist(x: WittVector) -> WittVector:
    """``x o omega``; equal to ``<1> * x``."""
    return WittVector(tuple((-1) ** (k + 1) * g for k, g in enumerate(x.ghost, start=1)))


def value_after_omega(x: WittVector, f: SymFunc) -> Fraction:
    return value_at(x, omega(f))


# ---------------------------------------------------------------------------
# effectivity


def _membership(x: WittVector, dom: Domain, tag: str) -> Verdict:
    n = x.truncation
    values = {}
    for w in range(1, n + 1):
        for lam in partitions_of(w):
            v = value_at(x, from_basis(tag, lam, max(n, 1)))
            values[lam] = v
            if not dom.contains(v):
                return Verdict(False, lam, v, v.denominator == 1, {"checked": len(values)})
    return Verdict(True, None, None, all(v.denominator == 1 for v in values.values()), {"checked": len(values)})


def member_W(x: WittVector, dom: Domain) -> Verdict:
    """``x(m_lam)`` in ``dom`` for all ``|lam| <= n``; witness is the first failure."""
    return _membership(x, dom, "m")


def member_WSch(x: WittVector, dom: Domain) -> Verdict:
    """``x(s_lam)`` in ``dom`` for all ``|lam| <= n``."""
    return _membership(x, dom, "s")


def ghost_symbols(n: int):
    import sympy

    return sympy.symbols(f"a1:{n + 1}")


def effectivity_expressions(tag: str, max_weight: int) -> list:
    """``(lam, poly)`` pairs: basis element ``tag_lam`` with ``p_i`` renamed ``a_i``.

    Polynomials are sympy expressions in ``a1, a2, ...`` with rational coefficients.
    """
    import sympy

    if tag not in ("m", "s"):
        raise ValueError("effectivity expressions are defined for the m and s bases")
    syms = ghost_symbols(max(max_weight, 1))
    out = []
    for w in range(1, max_weight + 1):
        for lam in partitions_of(w):
            f = from_basis(tag, lam, max(max_weight, 1))
            expr = sympy.Integer(0)
            for mu, c in f.coeffs.items():
                term = sympy.Rational(c.numerator, c.denominator)
                for part in mu:
                    term *= syms[part - 1]
                expr += term
            out.append((lam, sympy.expand(expr)))
    return out


# ---------------------------------------------------------------------------
# JSON


def to_json(x: WittVector) -> dict:
    return {"truncation": x.truncation, "ghost": [str(g) for g in x.ghost]}


def from_json(obj) -> WittVector:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "ghost" in obj:
        x = WittVector(tuple(_frac(str(v)) for v in obj["ghost"]))
    elif "series" in obj:
        x = from_series([_frac(str(v)) for v in obj["series"]], obj.get("normalization", "--"))
    elif "witt" in obj:
        x = from_witt_coords([_frac(str(v)) for v in obj["witt"]])
    else:
        raise ValueError("Witt vector JSON needs one of 'ghost', 'series' or 'witt'")
    n = obj.get("truncation")
    if n is not None and int(n) != x.truncation:
        raise ValueError(f"truncation {n} does not match {x.truncation} components")
    return x
