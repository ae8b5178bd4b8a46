"""Integer kernels for power-sum transition columns.

Partitions of a fixed weight ``n`` are stored as rows of a zero-padded
``(p(n), n)`` table in reverse lexicographic order; :func:`rank` maps a
partition back to its row. Two forward steps act on coefficient vectors
indexed by that table:

* ``schur_step``: multiplication by a power sum in the Schur basis
  (Murnaghan-Nakayama: add a border strip, sign by its height), done on the
  beta-set of the partition;
* ``monomial_step``: multiplication by a power sum in the monomial basis.

Starting from the vector ``[1]`` on the empty partition and applying the
steps for the parts of ``mu`` gives the character column ``chi^lambda(mu)``,
resp. the column of monomial coefficients of ``p_mu``.

The JIT path works on int64 and is only used while every value provably fits
(characters are at most sqrt(n!); monomial coefficients at most n!). Past that
the same code runs uncompiled on object arrays.
"""
from __future__ import annotations

import math
import threading
from functools import lru_cache

import numpy as np

from ._jit import JIT_ENABLED, maybe_njit
from .partitions import _partitions_tuple

# Largest weight for which the int64 kernels cannot overflow.
SCHUR_INT64_MAX_WEIGHT = 30
MONOMIAL_INT64_MAX_WEIGHT = 20


@lru_cache(maxsize=None)
def partition_counts(n: int) -> np.ndarray:
    """``P[m, k]`` = number of partitions of m with all parts <= k."""
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, :] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            P[m, k] = P[m, k - 1] + (P[m - k, k] if k <= m else 0)
    return P


@lru_cache(maxsize=None)
def partition_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    parts = _partitions_tuple(n)
    table = np.zeros((len(parts), max(n, 1)), dtype=np.int64)
    lengths = np.zeros(len(parts), dtype=np.int64)
    for row, lam in enumerate(parts):
        table[row, : len(lam)] = lam
        lengths[row] = len(lam)
    return table, lengths


@maybe_njit
def rank(parts, length, n, P):
    r = 0
    rem = n
    bound = n
    for i in range(length):
        v = parts[i]
        top = bound if bound < rem else rem
        for j in range(v + 1, top + 1):
            r += P[rem - j, j]
        rem -= v
        bound = v
    return r


@maybe_njit
def _schur_step(coeffs, table, lengths, k, n_out, P, out):
    for idx in range(coeffs.shape[0]):
        c = coeffs[idx]
        if c == 0:
            continue
        ln = lengths[idx]
        L = ln + k
        beads = np.zeros(L, dtype=np.int64)
        for i in range(L):
            part = table[idx, i] if i < ln else 0
            beads[i] = part + (L - 1 - i)
        occ = np.zeros(beads[0] + k + 1, dtype=np.bool_)
        for i in range(L):
            occ[beads[i]] = True
        newbeads = np.zeros(L, dtype=np.int64)
        newparts = np.zeros(n_out, dtype=np.int64)
        for i in range(L):
            b = beads[i]
            t = b + k
            if occ[t]:
                continue
            between = 0
            for q in range(b + 1, t):
                if occ[q]:
                    between += 1
            # beads[0..i-1] exceed b; exactly `between` of them lie below t
            pos = i - between
            w = 0
            for q in range(L):
                if w == pos:
                    newbeads[w] = t
                    w += 1
                if q == i:
                    continue
                newbeads[w] = beads[q]
                w += 1
            if w == pos:
                newbeads[w] = t
            length = 0
            for q in range(L):
                part = newbeads[q] - (L - 1 - q)
                if part > 0:
                    newparts[q] = part
                    length += 1
            r = rank(newparts, length, n_out, P)
            if between % 2 == 1:
                out[r] -= c
            else:
                out[r] += c
    return out


@maybe_njit
def _monomial_step(coeffs, table, lengths, k, n_out, P, out):
    for idx in range(coeffs.shape[0]):
        c = coeffs[idx]
        if c == 0:
            continue
        ln = lengths[idx]
        newparts = np.zeros(n_out, dtype=np.int64)
        prev = -1
        for i in range(ln + 1):
            v = table[idx, i] if i < ln else 0
            if v == prev:
                continue
            prev = v
            for q in range(ln):
                newparts[q] = table[idx, q]
            length = ln
            if i == ln:
                newparts[ln] = k
                length = ln + 1
            else:
                newparts[i] = v + k
            j = i
            while j > 0 and newparts[j - 1] < newparts[j]:
                tmp = newparts[j - 1]
                newparts[j - 1] = newparts[j]
                newparts[j] = tmp
                j -= 1
            mult = 0
            for q in range(length):
                if newparts[q] == v + k:
                    mult += 1
            r = rank(newparts, length, n_out, P)
            out[r] += mult * c
            for q in range(length):
                newparts[q] = 0
    return out


_STEPS = {"s": _schur_step, "m": _monomial_step}
_INT64_LIMIT = {"s": SCHUR_INT64_MAX_WEIGHT, "m": MONOMIAL_INT64_MAX_WEIGHT}


def apply_step(kind: str, coeffs: np.ndarray, m: int, k: int, use_jit: bool | None = None) -> np.ndarray:
    """Multiply a weight-``m`` coefficient vector by ``p_k`` in basis ``kind``."""
    n_out = m + k
    if use_jit is None:
        use_jit = JIT_ENABLED
    use_jit = use_jit and JIT_ENABLED and n_out <= _INT64_LIMIT[kind]
    table, lengths = partition_table(m)
    P = partition_counts(n_out)
    size = int(P[n_out, n_out])
    step = _STEPS[kind]
    if use_jit:
        out = np.zeros(size, dtype=np.int64)
        return step(np.asarray(coeffs, dtype=np.int64), table, lengths, k, n_out, P, out)
    out = np.zeros(size, dtype=object)
    out[:] = 0
    return step.py_func(np.asarray(coeffs, dtype=object), table, lengths, k, n_out, P, out)


class ColumnBuilder:
    """Memoized transition columns keyed by the ascending sequence of strip sizes.

    Prefix states are shared, so ``p_1^20 p_5`` reuses the work done for
    ``p_1^20``. Thread-safe: a lock guards the memo tables.
    """

    def __init__(self, kind: str, use_jit: bool | None = None):
        self.kind = kind
        self.use_jit = use_jit
        self._prefix: dict[tuple, np.ndarray] = {(): np.ones(1, dtype=object)}
        self._lock = threading.Lock()

    def column(self, mu) -> np.ndarray:
        key = tuple(sorted(mu))
        with self._lock:
            hit = self._prefix.get(key)
            if hit is not None:
                return hit
            start = len(key)
            while key[:start] not in self._prefix:
                start -= 1
            vec = self._prefix[key[:start]]
            weight = sum(key[:start])
            for i in range(start, len(key)):
                vec = apply_step(self.kind, vec, weight, key[i], self.use_jit)
                weight += key[i]
                self._prefix[key[: i + 1]] = vec
            return vec

    def preload(self, mu, column):
        with self._lock:
            self._prefix[tuple(sorted(mu))] = np.asarray(column, dtype=object)

    def items(self):
        with self._lock:
            return list(self._prefix.items())

    def clear(self):
        with self._lock:
            self._prefix = {(): np.ones(1, dtype=object)}


def int64_safe(kind: str, n: int) -> bool:
    if kind == "s":
        return math.isqrt(math.factorial(n)) < 2**62
    return math.factorial(n) < 2**62
