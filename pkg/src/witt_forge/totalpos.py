"""Total nonnegativity of truncated series and the polynomial criterion for W(N).

Everything is exact. Minors are taken of the lower-triangular Toeplitz matrix
``(a_{i-j})`` restricted to a finite index window, so a positive verdict is
relative to that truncation; a negative one is a genuine certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, lcm

from .symfunc import Verdict, _frac


@dataclass(frozen=True)
class TruncSeries:
    """``1 + a_1 t + ... + a_n t^n``; ``coeffs`` holds ``a_1..a_n``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs n >= 1")

    @classmethod
    def from_poly(cls, full) -> "TruncSeries":
        """From ``[1, a_1, ..., a_n]`` (the constant term must be 1)."""
        full = [_frac(c) for c in full]
        if not full or full[0] != 1:
            raise ValueError("constant term must be 1")
        rest = full[1:] or [Fraction(0)]
        return cls(tuple(rest))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def coef(self, m: int) -> Fraction:
        if m == 0:
            return Fraction(1)
        if 1 <= m <= len(self.coeffs):
            return self.coeffs[m - 1]
        return Fraction(0)

    def as_list(self) -> list:
        return [Fraction(1)] + list(self.coeffs)

    def degree(self) -> int:
        for m in range(len(self.coeffs), 0, -1):
            if self.coeffs[m - 1]:
                return m
        return 0


MAX_ORDER = 8


def _det_int(m: list) -> int:
    """Bareiss fraction-free elimination on an integer matrix (modified in place)."""
    r = len(m)
    if r == 0:
        return 1
    sign_ = 1
    prev = 1
    for k in range(r - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, r) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign_ = -sign_
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign_ * m[r - 1][r - 1]


def _det(rows) -> Fraction:
    """Exact determinant: clear denominators, then fraction-free elimination."""
    r = len(rows)
    if r == 0:
        return Fraction(1)
    den = 1
    for row in rows:
        for v in row:
            den = lcm(den, v.denominator)
    return Fraction(_det_int([[int(v * den) for v in row] for row in rows]), den**r)


def minor(s: TruncSeries, rows, cols) -> Fraction:
    return _det([[s.coef(i - j) for j in cols] for i in rows])


def _candidate_minors(window: int, order: int):
    # Only I >= J componentwise can be nonzero (otherwise a zero block sits in
    # the upper right); minors are shift invariant, so take min(J) = 0.
    for cols in combinations(range(window + 1), order):
        if cols[0] != 0:
            break
        for rows in combinations(range(window + 1), order):
            if all(i >= j for i, j in zip(rows, cols)):
                yield rows, cols


def toeplitz_minors_nonneg(s: TruncSeries, max_order: int) -> Verdict:
    """All minors of order ``<= max_order`` with indices in ``0..max(n, max_order)``.

    Entries are ``a_{i-j}`` with ``a_m = 0`` outside ``0..n``. The witness is
    ``(rows, cols)`` of the first negative minor (by order, then columns,
    then rows, lexicographically).
    """
    if max_order < 1 or max_order > MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}")
    window = max(s.n, max_order)
    # t -> D t turns every a_m into an integer and multiplies the (I, J) minor
    # by D^(sum I - sum J) > 0, so signs are unchanged
    D = 1
    for c in s.coeffs:
        D = lcm(D, c.denominator)
    scaled = [int(s.coef(m) * D**m) for m in range(window + 1)]
    checked = 0
    for order in range(1, max_order + 1):
        for rows, cols in _candidate_minors(window, order):
            v = _det_int([[scaled[i - j] if i >= j else 0 for j in cols] for i in rows])
            checked += 1
            if v < 0:
                value = Fraction(v, D ** (sum(rows) - sum(cols)))
                return Verdict(False, (rows, cols), value, value.denominator == 1, {"checked": checked, "window": window})
    return Verdict(True, None, None, True, {"checked": checked, "window": window})


def skew_shape_indices(lam, mu) -> tuple[tuple, tuple]:
    """Row and column indices of the Toeplitz minor equal to ``s_{lam/mu}``."""
    lam = tuple(lam)
    mu = tuple(mu)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError("shapes must be partitions")
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        raise ValueError(f"invalid skew shape {list(lam)}/{list(mu)}")
    ell = len(lam)
    mu = mu + (0,) * (ell - len(mu))
    rows = sorted(lam[i] - (i + 1) + ell for i in range(ell))
    cols = sorted(mu[i] - (i + 1) + ell for i in range(ell))
    return tuple(rows), tuple(cols)


def skew_schur_witness(s: TruncSeries, lam, mu=()) -> Fraction:
    """``s_{lam/mu}`` at the series, by Jacobi-Trudi ``det(h_{lam_i - mu_j - i + j})``.

    The series coefficients play the role of the ``h_m``.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    skew_shape_indices(lam, mu)
    ell = len(lam)
    mu = mu + (0,) * (ell - len(mu))
    return _det([[s.coef(lam[i] - mu[j] - i + j) for j in range(ell)] for i in range(ell)])


# ---------------------------------------------------------------------------
# exact real-root counting


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p: list) -> list:
    return _trim([i * p[i] for i in range(1, len(p))])


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, v in enumerate(b):
            a[shift + i] -= c * v
        _trim(a)
    return _trim(q), a


def _gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a] if a else a


def squarefree_decomposition(p) -> list:
    """Yun's algorithm: ``[(f_1, 1), (f_2, 2), ...]`` with ``p = c * prod f_i^i``."""
    p = _trim([_frac(c) for c in p])
    if len(p) <= 1:
        return []
    out = []
    a0 = _gcd(p, _deriv(p))
    b, _ = _divmod(p, a0)
    c, _ = _divmod(_deriv(p), a0)
    d = [x - y for x, y in _pad(c, _deriv(b))]
    _trim(d)
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        d = [x - y for x, y in _pad(c, _deriv(b))]
        _trim(d)
        i += 1
    return out


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [Fraction(0)] * (n - len(a)), list(b) + [Fraction(0)] * (n - len(b)))


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _eval(p: list, x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(p):
        v = v * x + c
    return v


def sturm_count_negative(p) -> int:
    """Distinct real roots of a square-free ``p`` in ``(-inf, 0)`` (``p(0) != 0``)."""
    p = _trim([_frac(c) for c in p])
    if len(p) <= 1:
        return 0
    seq = [p, _deriv(p)]
    while len(seq[-1]) > 1:
        _, r = _divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    at_neg_inf = [q[-1] * (-1) ** (len(q) - 1) for q in seq]
    at_zero = [q[0] for q in seq]
    return _sign_changes(at_neg_inf) - _sign_changes(at_zero)


def nonpositive_real_roots(s: TruncSeries) -> Verdict:
    """Is ``1 + a_1 t + ... + a_n t^n`` (integral) a product of real-rooted factors with roots ``<= 0``?

    The constant term is 1, so 0 is never a root; the test is whether the
    negative real roots, counted with multiplicity, make up the full degree.
    """
    if any(c.denominator != 1 for c in s.coeffs):
        raise ValueError("nonpositive_real_roots needs integer coefficients")
    poly = _trim(s.as_list())
    deg = len(poly) - 1
    if deg <= 0:
        return Verdict(True, None, None, True, {"degree": 0, "negative_roots": 0})
    count = 0
    for factor, mult in squarefree_decomposition(poly):
        count += mult * sturm_count_negative(factor)
    ok = count == deg
    return Verdict(ok, None if ok else deg - count, None, True, {"degree": deg, "negative_roots": count})


def linear_factors_nat(s: TruncSeries):
    """The multiset ``{a_i}`` if the polynomial is ``prod (1 + a_i t)`` with ``a_i`` in N, else ``None``."""
    poly = _trim(s.as_list())
    if any(c.denominator != 1 for c in poly):
        return None
    found = []
    while len(poly) > 1:
        lead = int(poly[-1])
        if lead <= 0:
            return None
        for a in range(1, lead + 1):
            if lead % a:
                continue
            q, r = _divmod(poly, [Fraction(1), Fraction(a)])
            if not r and all(c.denominator == 1 for c in q):
                found.append(a)
                poly = q
                break
        else:
            return None
    return sorted(found)


# ---------------------------------------------------------------------------
# Edrei-Thoma truncations and the coefficient bound


def edrei_thoma_truncation(gamma, alphas, betas, n: int) -> TruncSeries:
    """``exp(gamma t) prod(1 + alpha_i t) / prod(1 - beta_i t)`` modulo ``t^(n+1)``."""
    gamma = _frac(gamma)
    alphas = [_frac(a) for a in alphas]
    betas = [_frac(b) for b in betas]
    if n < 1:
        raise ValueError("n must be at least 1")
    if gamma < 0 or any(a < 0 for a in alphas) or any(b < 0 for b in betas):
        raise ValueError("Edrei-Thoma parameters must be nonnegative")
    series = [gamma**m / factorial(m) for m in range(n + 1)]
    for a in alphas:
        series = [series[m] + (a * series[m - 1] if m else 0) for m in range(n + 1)]
    for b in betas:
        geo = [b**m for m in range(n + 1)]
        series = [sum((series[j] * geo[m - j] for j in range(m + 1)), Fraction(0)) for m in range(n + 1)]
    return TruncSeries(tuple(series[1:]))


def factorial_bound_check(s: TruncSeries) -> Verdict:
    """``a_m <= a_1^m / m!`` for ``2 <= m <= n``; witness is the first failing ``m``."""
    a1 = s.coef(1)
    for m in range(2, s.n + 1):
        bound = a1**m / factorial(m)
        if s.coef(m) > bound:
            return Verdict(False, m, s.coef(m), True, {"bound": bound})
    return Verdict(True)
