"""Integer partitions: canonical values, enumeration, and the scalars built on them."""
from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache

DEFAULT_DEGREE_BOUND = 12


class CapacityError(ValueError):
    """An operation would exceed the configured degree bound."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions compare and hash like plain tuples, so ``Partition((2, 1))``
    and ``(2, 1)`` are interchangeable as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)


def format_partition(parts) -> str:
    return "[" + ",".join(str(x) for x in parts) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition must look like [3,2,1], got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return Partition(())
    return Partition(sorted((int(x) for x in body.split(",")), reverse=True))


def _check_bound(n: int, degree_bound: int | None):
    if degree_bound is not None and n > degree_bound:
        raise CapacityError(f"weight {n} exceeds degree bound {degree_bound}")


def _generate(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_tuple(n: int) -> tuple:
    return tuple(_generate(n, n))


def partitions_of(n: int, degree_bound: int | None = None) -> list[tuple]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_bound(n, degree_bound)
    return list(_partitions_tuple(n))


def partitions_up_to(n: int) -> list[tuple]:
    """Partitions of weight 0..n, grouped by weight, each group reverse lexicographic."""
    out = []
    for m in range(n + 1):
        out.extend(_partitions_tuple(m))
    return out


def conjugate(parts) -> tuple:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > i) for i in range(parts[0]))


@lru_cache(maxsize=None)
def z_factor(parts: tuple) -> int:
    """Centralizer order: product over part sizes i of i^m_i * m_i!."""
    z = 1
    for i, m in Counter(parts).items():
        z *= i**m * math.factorial(m)
    return z


def scale_parts(parts, n: int, degree_bound: int | None = None) -> tuple:
    if n <= 0:
        raise ValueError("scale factor must be positive")
    _check_bound(n * sum(parts), degree_bound)
    return tuple(n * x for x in parts)


def merge(a: tuple, b: tuple) -> tuple:
    """Multiset union of two partitions, kept sorted."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def sign(parts: tuple) -> int:
    """Sign of a permutation of cycle type ``parts``."""
    return -1 if (sum(parts) - len(parts)) % 2 else 1
