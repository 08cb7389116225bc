"""Quadratic fields Q(sqrt d): symbols, characters, splitting, special values."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ArgumentError, BoundError

__all__ = [
    "CLASS_NUMBER_ONE",
    "QuadraticField",
    "SplittingType",
    "L_chi_at_1",
    "chi_K",
    "dirichlet_chi",
    "factorize",
    "is_prime",
    "is_squarefree",
    "kronecker_symbol",
    "legendre_symbol",
    "local_factor",
    "pell_fundamental",
    "regulator",
    "splitting_type",
    "unit_group_order",
]

INT_LIMIT = 1 << 63

# The imaginary quadratic fields of class number one.
CLASS_NUMBER_ONE = (-1, -2, -3, -7, -11, -19, -43, -67, -163)


def _check_range(*values: int) -> None:
    for v in values:
        if abs(v) >= INT_LIMIT:
            raise ArgumentError(f"|{v}| exceeds the supported 63-bit range")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division."""
    _check_range(n)
    n = abs(n)
    if n == 0:
        raise ArgumentError("0 has no prime factorization")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for e in factorize(n).values())


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ArgumentError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _kronecker_two(a: int) -> int:
    if a % 2 == 0:
        return 0
    return 1 if a % 8 in (1, 7) else -1


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker-Legendre symbol (a/n) for arbitrary integers."""
    _check_range(a, n)
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    if n == 1:
        return result
    for p, e in factorize(n).items():
        if p == 2:
            sym = _kronecker_two(a)
        else:
            sym = legendre_symbol(a, p)
        if sym == 0:
            return 0
        if sym == -1 and e & 1:
            result = -result
    return result


@dataclass(frozen=True)
class QuadraticField:
    """The quadratic field Q(sqrt d) for a square-free ``d``."""

    d: int
    delta: int = field(init=False)
    unit_order: int | None = field(init=False)
    class_number_hint: int | None = field(init=False)

    def __post_init__(self):
        d = self.d
        if d in (0, 1) or not is_squarefree(d):
            raise ArgumentError(f"d must be square-free and not 0 or 1, got {d}")
        object.__setattr__(self, "delta", d if d % 4 == 1 else 4 * d)
        object.__setattr__(self, "unit_order", unit_group_order(d) if d < 0 else None)
        object.__setattr__(self, "class_number_hint", 1 if d in CLASS_NUMBER_ONE else None)

    @property
    def is_imaginary(self) -> bool:
        return self.d < 0

    @cached_property
    def chi_table(self) -> tuple[int, ...]:
        """``chi_K(r)`` for ``r = 0 .. |delta| - 1``."""
        return tuple(kronecker_symbol(self.delta, r) for r in range(abs(self.delta)))

    def chi(self, m: int) -> int:
        return self.chi_table[m % abs(self.delta)]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "delta": self.delta,
            "unit_order": self.unit_order,
            "class_number_hint": self.class_number_hint,
            "chi_table": [chi_K(self, m) for m in range(1, abs(self.delta) + 1)],
        }


def chi_K(field: QuadraticField, m: int) -> int:
    """Quadratic character of the field: the Kronecker symbol (delta/m)."""
    return kronecker_symbol(field.delta, m)


def dirichlet_chi(field: QuadraticField, m: int) -> int:
    """The same character written as a Dirichlet character mod |delta|.

    ``m`` is reduced to its least positive residue first; the four cases
    follow ``d mod 8``.
    """
    modulus = abs(field.delta)
    if math.gcd(m, modulus) != 1:
        raise ArgumentError(f"{m} is not coprime to the discriminant {field.delta}")
    m %= modulus
    d = field.d
    if d % 4 == 1:
        return kronecker_symbol(m, d)
    if d % 4 == 3:
        return (-1) ** ((m - 1) // 2) * kronecker_symbol(m, d)
    if d % 8 == 2:
        return (-1) ** ((m * m - 1) // 8) * kronecker_symbol(m, d // 2)
    # d = 6 mod 8
    return (-1) ** ((m - 1) * (m + 5) // 8) * kronecker_symbol(m, d // 2)


class SplittingType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def splitting_type(field: QuadraticField, p: int) -> SplittingType:
    if not is_prime(p):
        raise ArgumentError(f"{p} is not prime")
    c = chi_K(field, p)
    if c == 1:
        return SplittingType.SPLIT
    if c == -1:
        return SplittingType.INERT
    return SplittingType.RAMIFIED


def local_factor(field: QuadraticField, p: int, s: complex) -> complex:
    """Product of ``1 - N(P)^-s`` over the prime ideals P above ``p``.

    Built from the shape of the factorization of ``(p)``, not from the
    character value, so it can be checked against ``(1-p^-s)(1-chi(p)p^-s)``.
    """
    kind = splitting_type(field, p)
    x = complex(p) ** -s
    if kind is SplittingType.SPLIT:
        return (1 - x) * (1 - x)
    if kind is SplittingType.INERT:
        return 1 - complex(p * p) ** -s
    return 1 - x


def L_chi_at_1(field: QuadraticField) -> float:
    """L(chi_K, 1) from the finite closed-form sums (log-sine for real fields)."""
    n = abs(field.delta)
    if field.is_imaginary:
        total = 0
        for r in range(1, n):
            total += chi_K(field, r) * r
        return -math.pi / n**1.5 * total
    total = 0.0
    for r in range(1, n):
        c = chi_K(field, r)
        if c:
            total += c * math.log(math.sin(math.pi * r / n))
    return -total / math.sqrt(n)


def pell_fundamental(d: int, max_steps: int = 10_000) -> tuple[int, int]:
    """Least positive solution of ``x^2 - d y^2 = 1`` via the continued fraction of sqrt(d)."""
    if d <= 0 or not is_squarefree(d) or d == 1:
        raise ArgumentError(f"d must be a positive square-free integer > 1, got {d}")
    a0 = math.isqrt(d)
    m, q, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, qq = 0, 1
    for _ in range(max_steps):
        if p * p - d * qq * qq == 1:
            return p, qq
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        p_prev, p = p, a * p + p_prev
        q_prev, qq = qq, a * qq + q_prev
    raise BoundError(f"no Pell solution for d={d} within {max_steps} convergents")


def regulator(d: int) -> float:
    """log of the fundamental unit of Q(sqrt d), d > 0.

    The Pell solution is ``u`` or ``u**2`` depending on the norm of ``u``;
    for small ``d`` the unit itself is found by a direct search over
    ``(x + y sqrt d)/2`` with norm +-1.
    """
    if d < 0:
        return 1.0
    x, y = pell_fundamental(d)
    pell = math.log(x + y * math.sqrt(d))
    # search for a smaller unit of norm +-1; halves allowed when d = 1 mod 4
    denom = 2 if d % 4 == 1 else 1
    limit = max(1, y * denom)
    for b in range(1, limit + 1):
        for sign in (-1, 1):
            a2 = d * b * b + sign * 4 if denom == 2 else d * b * b + sign
            if a2 <= 0:
                continue
            a = math.isqrt(a2)
            if a * a == a2 and (denom == 1 or (a - b) % 2 == 0):
                return math.log((a + b * math.sqrt(d)) / denom)
    return pell


def unit_group_order(d: int) -> int:
    if d >= 0:
        raise ArgumentError(f"unit group is finite only for d < 0, got {d}")
    if d == -1:
        return 4
    if d == -3:
        return 6
    return 2
