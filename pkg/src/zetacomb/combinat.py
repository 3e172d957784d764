"""Number-theoretic sequences: binomials, Bernoulli, Stirling, factorial powers.

Conventions used throughout:

* Bernoulli numbers follow B_1 = -1/2, i.e. B_n = B_n(0) for the
  polynomials generated by z*e^{tz}/(e^z - 1).
* Stirling numbers of the first kind are the *signed* ones: the
  coefficients of the falling factorial, <z>_n = sum_k s(n,k) z^k.
* All tables are built by recurrence and memoized; an independent slow
  oracle for each (series division, polynomial expansion, partition
  enumeration) lives in the test suite, never here.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "binomial",
    "bernoulli_number",
    "bernoulli_poly",
    "stirling1",
    "stirling2",
    "falling_factorial",
    "rising_factorial",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 outside 0 <= k <= n. Requires n >= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0.

    >>> bernoulli_number(12)
    Fraction(-691, 2730)
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


def bernoulli_poly(n: int, z) -> Fraction:
    """B_n(z) = sum_k C(n,k) B_k z^{n-k}, evaluated exactly at rational z."""
    if n < 0:
        raise ValueError("n must be >= 0")
    zq = Fraction(z)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += comb(n, k) * bernoulli_number(k) * zq ** (n - k)
    return acc


@lru_cache(maxsize=None)
def _stirling_row(kind: str, n: int) -> tuple[int, ...]:
    # kind "first": s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
    # kind "second": S(n,k) = S(n-1,k-1) + k S(n-1,k)
    if n == 0:
        return (1,)
    prev = _stirling_row(kind, n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k else 0
        right = prev[k] if k < n else 0
        if kind == "first":
            row.append(left - (n - 1) * right)
        else:
            row.append(left + k * right)
    return tuple(row)


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind; 0 outside 0 <= k <= n.

    >>> stirling1(3, 2)
    -3
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return _stirling_row("first", n)[k]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind; 0 outside 0 <= k <= n.

    >>> stirling2(4, 2)
    7
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return _stirling_row("second", n)[k]


def falling_factorial(z, n: int) -> Fraction:
    """<z>_n = z (z-1) ... (z-n+1); empty product 1 when n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    zq = Fraction(z)
    acc = Fraction(1)
    for k in range(n):
        acc *= zq - k
    return acc


def rising_factorial(z, n: int) -> Fraction:
    """(z)_n = z (z+1) ... (z+n-1); equals (-1)^n <-z>_n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    zq = Fraction(z)
    acc = Fraction(1)
    for k in range(n):
        acc *= zq + k
    return acc
