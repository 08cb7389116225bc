"""Exact Dirichlet-series coefficient tables and their truncated sums.

``zeta_Q(i)(s) = sum a_n n^-s`` with ``a_n`` the number of Gaussian ideals of
norm ``n``; the zeta function of BQ_n is the ``2**(n-1)``-th Dirichlet power
of that series.  Tables hold Python integers, so no coefficient can
overflow; the convolution runs on the int64 kernel while every entry provably
fits and otherwise falls back to exact big-integer arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .analytic import EvalResult
from .errors import ArgumentError
from .gaussian import ideal_count_table

__all__ = [
    "CoefficientTable",
    "coeffs_bqn",
    "coeffs_zeta_qi",
    "convolution_power",
    "delta_table",
    "dirichlet_convolve",
    "ones_table",
    "partial_sum",
]


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficients ``values[0] .. values[N-1]`` of ``n = 1 .. N``; ``table[n]`` is 1-based."""

    label: str
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ArgumentError("a coefficient table needs N >= 1")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def N(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(f"coefficient index {n} outside 1..{self.N}")
        return self.values[n - 1]

    def padded(self) -> list[int]:
        """Values with a leading 0 so list index equals ``n``."""
        return [0, *self.values]

    def as_int64(self) -> np.ndarray | None:
        if max(abs(v) for v in self.values) >= 1 << 63:
            return None
        return np.array(self.padded(), dtype=np.int64)

    def to_dict(self) -> dict:
        return {"label": self.label, "N": self.N, "values": list(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def csv_rows(self):
        yield ("n", "value")
        for n, v in enumerate(self.values, start=1):
            yield n, v


def delta_table(N: int) -> CoefficientTable:
    """The convolution identity (1, 0, 0, ...)."""
    return CoefficientTable("delta", [1] + [0] * (N - 1))


def ones_table(N: int) -> CoefficientTable:
    """Coefficients of the Riemann zeta function."""
    return CoefficientTable("zeta", [1] * N)


def coeffs_zeta_qi(N: int) -> CoefficientTable:
    if N < 1:
        raise ArgumentError(f"N must be positive, got {N}")
    return CoefficientTable("zeta_qi", ideal_count_table(N)[1:].tolist())


def _convolve_bigint(a: Sequence[int], b: Sequence[int]) -> list[int]:
    N = len(a) - 1
    c = [0] * (N + 1)
    for d in range(1, N + 1):
        x = a[d]
        if not x:
            continue
        for k in range(1, N // d + 1):
            c[d * k] += x * b[k]
    return c


def dirichlet_convolve(a: CoefficientTable, b: CoefficientTable, label: str | None = None) -> CoefficientTable:
    """``c[n] = sum_{d | n} a[d] b[n/d]`` in exact integers."""
    if a.N != b.N:
        raise ArgumentError(f"table sizes differ: {a.N} vs {b.N}")
    label = label or f"({a.label})*({b.label})"
    a64, b64 = a.as_int64(), b.as_int64()
    if a64 is not None and b64 is not None:
        c = kernels.convolve_i64(a64, b64)
        if c is not None:
            return CoefficientTable(label, c[1:].tolist())
    return CoefficientTable(label, _convolve_bigint(a.padded(), b.padded())[1:])


def convolution_power(table: CoefficientTable, k: int, label: str | None = None) -> CoefficientTable:
    """``k``-fold Dirichlet power by repeated squaring."""
    if k < 0:
        raise ArgumentError("negative convolution power")
    label = label or f"{table.label}^{k}"
    result = delta_table(table.N)
    base = table
    while k:
        if k & 1:
            result = dirichlet_convolve(result, base)
        k >>= 1
        if k:
            base = dirichlet_convolve(base, base)
    return CoefficientTable(label, result.values)


def coeffs_bqn(level: int, N: int) -> CoefficientTable:
    """Coefficients ``A_n`` of the zeta function of BQ_level."""
    if level < 2:
        raise ArgumentError(f"level must be >= 2, got {level}")
    table = coeffs_zeta_qi(N)
    for _ in range(level - 1):
        table = dirichlet_convolve(table, table)
    return CoefficientTable(f"bq{level}", table.values)


def partial_sum(table: CoefficientTable, s) -> EvalResult:
    """``sum_{n <= N} table[n] n**-s`` with a crude tail estimate.

    For ``Re(s) > 1`` the estimate is ``max|a_n| * N**(1-sigma) / (sigma-1)``
    (integral comparison); otherwise it is infinite.  It is informative only.
    """
    s = complex(s)
    values = np.array([float(v) for v in table.padded()])
    value = kernels.dirichlet_sum(values, s)
    sigma = s.real
    if sigma > 1:
        peak = max(abs(v) for v in table.values)
        tail = peak * table.N ** (1 - sigma) / (sigma - 1)
    else:
        tail = math.inf
    return EvalResult(value, tail, f"partial-sum N={table.N}")
