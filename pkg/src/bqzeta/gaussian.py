"""Brute-force ground truth in Z[i]: sums of two squares and divisor classes.

``r2(n)`` counts ordered pairs ``(p, q)`` of integers with ``p^2 + q^2 = n``.
The number of ideals of Z[i] of norm ``n`` is ``r2(n) / 4`` (the four units
act freely on representations), which is the n-th Dirichlet coefficient of
the Dedekind zeta function of Q(i).
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .errors import ArgumentError, BoundError
from .quadratic import QuadraticField

__all__ = [
    "R2_BOUND",
    "ideal_count",
    "ideal_count_table",
    "r2_bruteforce",
    "r2_divisor_table",
    "r2_table",
    "r2_via_divisors",
    "sigma_counts",
    "sigma_table",
    "table_rows",
]

R2_BOUND = 10**8

_GAUSS = QuadraticField(-1)


def _check_n(n: int, bound: int | None = None) -> None:
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    if bound is not None and n > bound:
        raise BoundError(f"n={n} exceeds the brute-force bound {bound}")


def r2_bruteforce(n: int, bound: int = R2_BOUND) -> int:
    """Count lattice points on the circle of radius sqrt(n) by scanning ``|p| <= sqrt(n)``."""
    _check_n(n, bound)
    R = math.isqrt(n)
    count = 0
    for p in range(-R, R + 1):
        rest = n - p * p
        q = math.isqrt(rest)
        if q * q == rest:
            count += 1 if q == 0 else 2
    return count


def _divisors(n: int):
    d = 1
    while d * d <= n:
        if n % d == 0:
            yield d
            if d * d != n:
                yield n // d
        d += 1


def r2_via_divisors(n: int) -> int:
    """``4 * sum_{d | n} chi_{-4}(d)``."""
    _check_n(n)
    return 4 * sum(_GAUSS.chi(d) for d in _divisors(n))


def sigma_counts(n: int) -> tuple[int, int]:
    """Numbers of divisors of ``n`` congruent to 1 and to 3 modulo 4."""
    _check_n(n)
    s1 = s3 = 0
    for d in _divisors(n):
        r = d % 4
        if r == 1:
            s1 += 1
        elif r == 3:
            s3 += 1
    return s1, s3


def ideal_count(n: int) -> int:
    """Number of ideals of Z[i] with norm ``n``."""
    return r2_via_divisors(n) // 4


# -- bulk tables (arrays of length N + 1, entry 0 unused) ----------------------


def r2_table(N: int, bound: int = R2_BOUND) -> np.ndarray:
    """``r2(n)`` for all ``n <= N`` by enumerating the lattice points of the disc."""
    _check_n(N, bound)
    out = kernels.r2_counts(N)
    out[0] = 0
    return out


def r2_divisor_table(N: int) -> np.ndarray:
    """``4 * sum_{d|n} chi_{-4}(d)`` for all ``n <= N`` by sieving divisors."""
    _check_n(N)
    chi = np.array([_GAUSS.chi(d) for d in range(4)], dtype=np.int64)
    f = chi[np.arange(N + 1) % 4]
    f[0] = 0
    return 4 * kernels.divisor_sum(f)


def sigma_table(N: int) -> tuple[np.ndarray, np.ndarray]:
    _check_n(N)
    return kernels.divisor_class_counts(N)


def ideal_count_table(N: int) -> np.ndarray:
    return r2_table(N) // 4


def table_rows(N: int):
    """Rows ``(n, r2, a_n, s1, s3)`` for ``n = 1..N``."""
    r2 = r2_table(N)
    s1, s3 = sigma_table(N)
    for n in range(1, N + 1):
        yield n, int(r2[n]), int(r2[n]) // 4, int(s1[n]), int(s3[n])
