"""Multiindices, diagonal intervals and binomial coefficients mod p.

A multiindex is a plain tuple of non-negative ints. Every matrix in the
package is indexed by the graded-lex enumeration of a diagonal interval
[k, m]^n: first by total degree, then lexicographically.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from frobjac.errors import CapacityError, DimensionError

MultiIndex = tuple[int, ...]

#: Largest number of points an interval (and so a matrix side) may have.
SIZE_CAP = 32768


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    return p


def grade(a: MultiIndex) -> int:
    return sum(a)


def glex_key(a: MultiIndex) -> tuple[int, MultiIndex]:
    return sum(a), tuple(a)


def graded_lex_compare(a: MultiIndex, b: MultiIndex) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")
    ka, kb = glex_key(a), glex_key(b)
    return (ka > kb) - (ka < kb)


def leq(a: MultiIndex, b: MultiIndex) -> bool:
    """Componentwise partial order."""
    return all(x <= y for x, y in zip(a, b))


def add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x - y for x, y in zip(a, b))


def mi_factorial(a: MultiIndex) -> int:
    return prod(factorial(x) for x in a)


def unit(i: int, n: int) -> MultiIndex:
    return tuple(1 if j == i else 0 for j in range(n))


def zero(n: int) -> MultiIndex:
    return (0,) * n


@lru_cache(maxsize=None)
def interval_enumerate(k: int, m: int, n: int) -> tuple[MultiIndex, ...]:
    """All of [k, m]^n in ascending graded-lex order."""
    if n < 1 or k < 0 or m < k:
        raise ValueError(f"bad interval [{k},{m}] in dimension {n}")
    if (m - k + 1) ** n > SIZE_CAP:
        raise CapacityError(f"[{k},{m}]^{n} has {(m - k + 1) ** n} points (cap {SIZE_CAP})")
    points: list[MultiIndex] = [()]
    for _ in range(n):
        points = [pt + (c,) for pt in points for c in range(k, m + 1)]
    return tuple(sorted(points, key=glex_key))


@lru_cache(maxsize=None)
def _ranks(r: int, n: int) -> dict[MultiIndex, int]:
    return {a: i for i, a in enumerate(interval_enumerate(0, r - 1, n))}


def rank_in_interval(a: MultiIndex, p: int) -> int:
    """Position of ``a`` in the graded-lex enumeration of [0, p-1]^n."""
    if any(x < 0 or x >= p for x in a):
        raise ValueError(f"{a} is not in [0,{p - 1}]")
    return _ranks(p, len(a))[tuple(a)]


def binomial(a: MultiIndex, b: MultiIndex, p: int) -> int:
    """Product of componentwise binomials mod p; zero unless b <= a."""
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")
    if not leq(b, a):
        return 0
    out = 1
    for x, y in zip(a, b):
        out = out * (factorial(x) // (factorial(y) * factorial(x - y))) % p
    return out % p


def multinomial(a: MultiIndex, parts: Sequence[MultiIndex], p: int) -> int:
    if any(len(b) != len(a) for b in parts):
        raise DimensionError("parts must match the dimension of a")
    total = zero(len(a))
    for b in parts:
        total = add(total, b)
    if total != tuple(a) or any(x < 0 for b in parts for x in b):
        raise ValueError(f"parts {list(parts)} do not sum to {a}")
    out = 1
    for i, x in enumerate(a):
        out = out * (factorial(x) // prod(factorial(b[i]) for b in parts)) % p
    return out % p


def integer_binomial(m: int, k: int) -> int:
    return comb(m, k) if 0 <= k <= m else 0


def compositions_of(a: MultiIndex, sizes: Sequence[int]):
    """Yield tuples (t_1, ..., t_k) of multiindices with sum a and |t_i| = sizes[i]."""
    n = len(a)
    if not sizes:
        if all(x == 0 for x in a):
            yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for t in interval_enumerate(0, max(a) if a else 0, n) if n else ((),):
        if sum(t) != first or not leq(t, a):
            continue
        for tail in compositions_of(sub(a, t), rest):
            yield (t,) + tail
