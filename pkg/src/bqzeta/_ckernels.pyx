# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, log, exp, cos, sin

cnp.import_array()

cdef extern from *:
    """
    static int bq_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int bq_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int bq_mul_ovf(long long a, long long b, long long *r) nogil
    int bq_add_ovf(long long a, long long b, long long *r) nogil


def r2_counts(Py_ssize_t N):
    cdef Py_ssize_t R = <Py_ssize_t>sqrt(<double>N)
    while (R + 1) * (R + 1) <= N:
        R += 1
    while R * R > N:
        R -= 1
    out_arr = np.zeros(N + 1, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t p, q, v
    cdef long long w
    with nogil:
        for p in range(R + 1):
            for q in range(R + 1):
                v = p * p + q * q
                if v > N:
                    break
                w = (2 if p > 0 else 1) * (2 if q > 0 else 1)
                out[v] += w
    return out_arr


def divisor_class_counts(Py_ssize_t N):
    s1_arr = np.zeros(N + 1, dtype=np.int64)
    s3_arr = np.zeros(N + 1, dtype=np.int64)
    cdef long long[::1] s1 = s1_arr
    cdef long long[::1] s3 = s3_arr
    cdef Py_ssize_t d, k
    with nogil:
        for d in range(1, N + 1):
            if d % 2 == 0:
                continue
            k = d
            if d % 4 == 1:
                while k <= N:
                    s1[k] += 1
                    k += d
            else:
                while k <= N:
                    s3[k] += 1
                    k += d
    return s1_arr, s3_arr


def divisor_sum(f):
    cdef long long[::1] fv = np.ascontiguousarray(f, dtype=np.int64)
    cdef Py_ssize_t N = fv.shape[0] - 1
    g_arr = np.zeros(N + 1, dtype=np.int64)
    cdef long long[::1] g = g_arr
    cdef Py_ssize_t d, k
    cdef long long x
    with nogil:
        for d in range(1, N + 1):
            x = fv[d]
            if x == 0:
                continue
            k = d
            while k <= N:
                g[k] += x
                k += d
    return g_arr


def convolve_i64(a, b):
    cdef long long[::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef long long[::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t N = av.shape[0] - 1
    c_arr = np.zeros(N + 1, dtype=np.int64)
    cdef long long[::1] c = c_arr
    cdef Py_ssize_t d, k
    cdef long long x, prod
    cdef int overflow = 0
    with nogil:
        for d in range(1, N + 1):
            x = av[d]
            if x == 0:
                continue
            for k in range(1, N // d + 1):
                if bq_mul_ovf(x, bv[k], &prod) or bq_add_ovf(c[d * k], prod, &c[d * k]):
                    overflow = 1
                    break
            if overflow:
                break
    if overflow:
        return None
    return c_arr


def dirichlet_sum(values, s):
    cdef double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t N = v.shape[0] - 1
    cdef double sr = s.real, si = s.imag
    cdef double re = 0.0, im = 0.0, lg, mag
    cdef Py_ssize_t n
    with nogil:
        for n in range(1, N + 1):
            if v[n] == 0.0:
                continue
            lg = log(<double>n)
            mag = v[n] * exp(-sr * lg)
            re += mag * cos(si * lg)
            im -= mag * sin(si * lg)
    return complex(re, im)


def lattice_sum(Py_ssize_t M, s):
    cdef double sr = s.real, si = s.imag
    cdef double re = 0.0, im = 0.0, lg, mag
    cdef Py_ssize_t m, n
    with nogil:
        for m in range(1, M + 1):
            for n in range(0, M + 1):
                lg = log(<double>(m * m + n * n))
                mag = exp(-sr * lg)
                re += mag * cos(si * lg)
                im -= mag * sin(si * lg)
    return 4 * complex(re, im)


def primes_upto(Py_ssize_t P):
    if P < 2:
        return np.zeros(0, dtype=np.int64)
    sieve_arr = np.ones(P + 1, dtype=np.uint8)
    cdef unsigned char[::1] sieve = sieve_arr
    cdef Py_ssize_t p, k
    sieve[0] = 0
    sieve[1] = 0
    with nogil:
        p = 2
        while p * p <= P:
            if sieve[p]:
                k = p * p
                while k <= P:
                    sieve[k] = 0
                    k += p
            p += 1
    return np.flatnonzero(sieve_arr).astype(np.int64)
