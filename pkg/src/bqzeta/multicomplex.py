"""Exact arithmetic in the multicomplex rational algebras BQ_n.

An element of level ``n`` is stored as ``2**n`` rational coordinates over the
unit basis ``prod_{t in I} i_t``.  The basis index of a unit is the bitmask of
``I`` (bit ``t-1`` set iff ``i_t`` occurs), so index 0 is the real part,
index 1 is ``i1``, index 2 is ``i2`` and index 3 is ``i1*i2`` (the hyperbolic
unit usually written ``k``).

Units commute and square to -1, hence

    unit(I) * unit(J) = (-1)**|I & J| * unit(I ^ J).

The idempotent representation splits ``Z = Z1 + i_n Z2`` as
``(Z1 - i_{n-1} Z2) e + (Z1 + i_{n-1} Z2) e'`` with ``e = (1 + i_{n-1} i_n)/2``
and ``e' = (1 - i_{n-1} i_n)/2``, and recurses down to complex numbers in
``i1``.  Components are ordered so that the outermost split is the most
significant bit of the component index (``e`` contributes 0, ``e'`` 1).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ArgumentError, ZeroDivisorError

__all__ = [
    "ComplexRational",
    "IdempotentVector",
    "Multicomplex",
    "from_idempotent",
    "idempotent_set",
    "is_zero_divisor",
    "mc_add",
    "mc_inverse",
    "mc_mul",
    "to_idempotent",
    "to_stage",
    "from_stage",
    "unit_product",
]


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coordinates; pass a Fraction or a string")
    return Fraction(x)


def _format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def unit_product(i: int, j: int) -> tuple[int, int]:
    """Return ``(sign, index)`` with ``unit(i) * unit(j) == sign * unit(index)``."""
    return (-1 if bin(i & j).count("1") & 1 else 1), i ^ j


@dataclass(frozen=True)
class ComplexRational:
    """Gaussian rational ``re + im*i1`` with exact arithmetic."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _rational(self.re))
        object.__setattr__(self, "im", _rational(self.im))

    def __add__(self, other):
        other = _as_complex_rational(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_complex_rational(other)
        return ComplexRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _as_complex_rational(other) - self

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_complex_rational(other)
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _as_complex_rational(other).inverse()

    def __pow__(self, m: int):
        if m < 0:
            return self.inverse() ** -m
        result = ComplexRational(1)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> ComplexRational:
        return ComplexRational(self.re, -self.im)

    def inverse(self) -> ComplexRational:
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of 0")
        return ComplexRational(self.re / n, -self.im / n)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}*i1"


def _as_complex_rational(x) -> ComplexRational:
    if isinstance(x, ComplexRational):
        return x
    return ComplexRational(x)


class Multicomplex:
    """Immutable element of BQ_n with exact rational coordinates."""

    __slots__ = ("level", "coords")

    def __init__(self, level: int, coords: Iterable):
        if level < 1:
            raise ArgumentError(f"level must be >= 1, got {level}")
        coords = tuple(_rational(c) for c in coords)
        if len(coords) != 1 << level:
            raise ArgumentError(f"level {level} needs {1 << level} coordinates, got {len(coords)}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Multicomplex is immutable")

    @classmethod
    def zero(cls, level: int) -> Multicomplex:
        return cls(level, [0] * (1 << level))

    @classmethod
    def scalar(cls, level: int, value) -> Multicomplex:
        coords = [0] * (1 << level)
        coords[0] = value
        return cls(level, coords)

    @classmethod
    def one(cls, level: int) -> Multicomplex:
        return cls.scalar(level, 1)

    @classmethod
    def unit(cls, level: int, *units: int) -> Multicomplex:
        """The basis unit ``prod i_t`` for the given 1-based unit numbers."""
        index = 0
        for t in units:
            if not 1 <= t <= level:
                raise ArgumentError(f"unit i{t} does not exist at level {level}")
            if index >> (t - 1) & 1:
                raise ArgumentError(f"unit i{t} repeated")
            index |= 1 << (t - 1)
        coords = [0] * (1 << level)
        coords[index] = 1
        return cls(level, coords)

    @classmethod
    def from_complex(cls, level: int, z: ComplexRational) -> Multicomplex:
        coords = [0] * (1 << level)
        coords[0] = z.re
        coords[1] = z.im
        return cls(level, coords)

    def _coerce(self, other) -> Multicomplex:
        if isinstance(other, Multicomplex):
            if other.level != self.level:
                raise ArgumentError(f"level mismatch: {self.level} vs {other.level}")
            return other
        if isinstance(other, ComplexRational):
            return Multicomplex.from_complex(self.level, other)
        if isinstance(other, (int, Fraction)):
            return Multicomplex.scalar(self.level, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multicomplex(self.level, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multicomplex(self.level, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return Multicomplex(self.level, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Multicomplex(self.level, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = [Fraction(0)] * len(self.coords)
        nz_b = [(j, b) for j, b in enumerate(other.coords) if b]
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in nz_b:
                if bin(i & j).count("1") & 1:
                    out[i ^ j] -= a * b
                else:
                    out[i ^ j] += a * b
        return Multicomplex(self.level, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * mc_inverse(self._coerce(other))

    def __pow__(self, m: int):
        if m < 0:
            return mc_inverse(self) ** -m
        result = Multicomplex.one(self.level)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Multicomplex):
            return self.level == other.level and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self == Multicomplex.scalar(self.level, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.level, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"Multicomplex({self.level}, [{', '.join(map(str, self.coords))}])"

    def __str__(self):
        terms = []
        for index, c in enumerate(self.coords):
            if not c:
                continue
            units = "*".join(f"i{t + 1}" for t in range(self.level) if index >> t & 1)
            mag = abs(c)
            if not units:
                body = str(mag)
            elif mag == 1:
                body = units
            else:
                body = f"{mag}*{units}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self) -> dict:
        return {"level": self.level, "coords": [_format_rational(c) for c in self.coords]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Multicomplex:
        try:
            level = int(data["level"])
            coords = [Fraction(str(c)) for c in data["coords"]]
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ArgumentError(f"malformed multicomplex record: {exc}") from exc
        return cls(level, coords)

    @classmethod
    def from_json(cls, text: str) -> Multicomplex:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class IdempotentVector:
    """The final-stage components ``beta_j`` of an element of BQ_n."""

    level: int
    components: tuple[ComplexRational, ...]

    def __post_init__(self):
        if self.level < 2:
            raise ArgumentError("idempotent representation needs level >= 2")
        comps = tuple(_as_complex_rational(c) for c in self.components)
        if len(comps) != 1 << (self.level - 1):
            raise ArgumentError(
                f"level {self.level} needs {1 << (self.level - 1)} components, got {len(comps)}"
            )
        object.__setattr__(self, "components", comps)

    def __mul__(self, other: IdempotentVector) -> IdempotentVector:
        self._check(other)
        return IdempotentVector(self.level, [a * b for a, b in zip(self.components, other.components)])

    def __add__(self, other: IdempotentVector) -> IdempotentVector:
        self._check(other)
        return IdempotentVector(self.level, [a + b for a, b in zip(self.components, other.components)])

    def __pow__(self, m: int) -> IdempotentVector:
        return IdempotentVector(self.level, [c**m for c in self.components])

    def _check(self, other):
        if other.level != self.level:
            raise ArgumentError(f"level mismatch: {self.level} vs {other.level}")

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "components": [[_format_rational(c.re), _format_rational(c.im)] for c in self.components],
        }


def mc_add(a: Multicomplex, b: Multicomplex) -> Multicomplex:
    if a.level != b.level:
        raise ArgumentError(f"level mismatch: {a.level} vs {b.level}")
    return a + b


def mc_mul(a: Multicomplex, b: Multicomplex) -> Multicomplex:
    if a.level != b.level:
        raise ArgumentError(f"level mismatch: {a.level} vs {b.level}")
    return a * b


# -- idempotent splitting on raw coordinate lists ---------------------------


def _times_unit(coords: Sequence[Fraction], bit: int) -> list[Fraction]:
    """Multiply a coordinate vector by the imaginary unit with index bit ``bit``."""
    out = [Fraction(0)] * len(coords)
    mask = 1 << bit
    for index, c in enumerate(coords):
        out[index ^ mask] = -c if index & mask else c
    return out


def _split(coords: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """One splitting step: level m -> the (e, e') parts at level m-1."""
    half = len(coords) // 2
    z1, z2 = coords[:half], coords[half:]
    iz2 = _times_unit(z2, half.bit_length() - 2)
    return [a - b for a, b in zip(z1, iz2)], [a + b for a, b in zip(z1, iz2)]


def _join(plus: Sequence[Fraction], minus: Sequence[Fraction]) -> list[Fraction]:
    """Inverse of :func:`_split`."""
    half = len(plus)
    z1 = [(p + m) / 2 for p, m in zip(plus, minus)]
    iz2 = [(m - p) / 2 for p, m in zip(plus, minus)]
    # i * (i z2) = -z2
    z2 = [-c for c in _times_unit(iz2, half.bit_length() - 2)]
    return z1 + z2


def to_stage(z: Multicomplex, k: int) -> list[Multicomplex]:
    """Split ``z`` ``k`` times, returning ``2**k`` elements of level ``n - k``.

    ``k = n - 1`` yields level-1 elements (complex rationals in ``i1``).
    """
    if not 0 <= k <= z.level - 1:
        raise ArgumentError(f"stage must be in [0, {z.level - 1}], got {k}")
    parts = [list(z.coords)]
    for _ in range(k):
        nxt = []
        for p in parts:
            nxt.extend(_split(p))
        parts = nxt
    return [Multicomplex(z.level - k, p) for p in parts]


def from_stage(parts: Sequence[Multicomplex]) -> Multicomplex:
    """Inverse of :func:`to_stage`."""
    count = len(parts)
    if count == 0 or count & (count - 1):
        raise ArgumentError("number of stage parts must be a power of two")
    coords = [list(p.coords) for p in parts]
    while len(coords) > 1:
        coords = [_join(coords[i], coords[i + 1]) for i in range(0, len(coords), 2)]
    return Multicomplex(parts[0].level + count.bit_length() - 1, coords[0])


def to_idempotent(z: Multicomplex) -> IdempotentVector:
    if z.level < 2:
        raise ArgumentError("idempotent representation needs level >= 2")
    parts = to_stage(z, z.level - 1)
    return IdempotentVector(z.level, [ComplexRational(*p.coords) for p in parts])


def from_idempotent(v: IdempotentVector) -> Multicomplex:
    return from_stage([Multicomplex(1, [c.re, c.im]) for c in v.components])


def mc_inverse(z: Multicomplex) -> Multicomplex:
    v = to_idempotent(z)
    if not all(v.components):
        raise ZeroDivisorError(f"{z} is not invertible (zero idempotent component)")
    return from_idempotent(IdempotentVector(v.level, [c.inverse() for c in v.components]))


def is_zero_divisor(z: Multicomplex) -> bool:
    if not z:
        return False
    return not all(to_idempotent(z).components)


def idempotent_set(n: int, k: int) -> list[Multicomplex]:
    """The ``2**k`` orthogonal idempotents of stage ``k`` at level ``n``.

    Built from ``e_{t,t+1} = (1 + i_t i_{t+1})/2`` and its conjugate for
    ``t = n-1, ..., n-k``; the pair ``(n-1, n)`` is the most significant
    bit of the enumeration index, matching :func:`to_stage`.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ArgumentError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    pairs = [(t, t + 1) for t in range(n - 1, n - k - 1, -1)]
    half = Fraction(1, 2)
    factors = []
    for a, b in pairs:
        hyper = Multicomplex.unit(n, a, b)
        one = Multicomplex.one(n)
        factors.append(((one + hyper) * half, (one - hyper) * half))
    out = []
    for bits in itertools.product((0, 1), repeat=k):
        e = Multicomplex.one(n)
        for (plain, bar), bit in zip(factors, bits):
            e = e * (bar if bit else plain)
        out.append(e)
    return out
