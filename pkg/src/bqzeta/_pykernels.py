"""numpy implementations of the hot loops.

Same signatures and results as the compiled ``_ckernels`` module.  Integer
tables are int64 arrays of length ``N + 1`` whose entry 0 is unused.
"""

import numpy as np

_OVERFLOW_LIMIT = float(1 << 62)


def r2_counts(N):
    """``out[n]`` = number of ``(p, q)`` in Z^2 with ``p^2 + q^2 = n``, for 0 <= n <= N."""
    R = int(np.sqrt(N))
    while (R + 1) * (R + 1) <= N:
        R += 1
    out = np.zeros(N + 1, dtype=np.int64)
    q = np.arange(R + 1, dtype=np.int64)
    q2 = q * q
    wq = np.where(q > 0, 2, 1)
    for p in range(R + 1):
        vals = p * p + q2
        keep = vals <= N
        weight = wq[keep] * (2 if p else 1)
        out += np.bincount(vals[keep], weights=weight, minlength=N + 1).astype(np.int64)
    return out


def divisor_class_counts(N):
    """Per ``n``: the number of divisors that are 1 mod 4 and 3 mod 4."""
    s1 = np.zeros(N + 1, dtype=np.int64)
    s3 = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1, 4):
        s1[d::d] += 1
    for d in range(3, N + 1, 4):
        s3[d::d] += 1
    return s1, s3


def divisor_sum(f):
    """``g[n] = sum_{d | n} f[d]``."""
    f = np.asarray(f, dtype=np.int64)
    N = len(f) - 1
    g = np.zeros(N + 1, dtype=np.int64)
    for d in np.flatnonzero(f[1:]) + 1:
        g[d::d] += f[d]
    return g


def convolve_i64(a, b):
    """Dirichlet convolution, or ``None`` if any entry could leave int64 range."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    N = len(a) - 1
    absa = np.abs(a).astype(np.float64)
    absb = np.abs(b).astype(np.float64)
    bound = np.zeros(N + 1)
    c = np.zeros(N + 1, dtype=np.int64)
    for d in np.flatnonzero(a[1:]) + 1:
        m = N // d
        bound[d::d] += absa[d] * absb[1 : m + 1]
    if bound.max(initial=0.0) >= _OVERFLOW_LIMIT:
        return None
    for d in np.flatnonzero(a[1:]) + 1:
        m = N // d
        c[d::d] += a[d] * b[1 : m + 1]
    return c


def dirichlet_sum(values, s):
    """``sum_{n >= 1} values[n] * n**-s`` accumulated in index order."""
    v = np.asarray(values, dtype=np.float64)
    n = np.arange(1, len(v), dtype=np.float64)
    terms = v[1:] * np.exp(-complex(s) * np.log(n))
    total = 0j
    # fixed-size blocks keep the result independent of numpy's pairwise tree
    for start in range(0, len(terms), 4096):
        total += complex(terms[start : start + 4096].sum())
    return total


def lattice_sum(M, s):
    """``sum (m^2 + n^2)^-s`` over the square ``|m|, |n| <= M`` without the origin."""
    s = complex(s)
    n = np.arange(0, M + 1, dtype=np.float64)
    total = 0j
    for m in range(1, M + 1):
        total += complex(np.exp(-s * np.log(m * m + n * n)).sum())
    # four rotations of {m >= 1, n >= 0} tile the punctured square
    return 4 * total


def primes_upto(P):
    if P < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(P + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(P**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).astype(np.int64)
