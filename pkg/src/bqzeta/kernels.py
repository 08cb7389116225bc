"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
(or when ``BQZETA_PURE=1`` is set) the numpy versions in ``_pykernels``
are used.  Both expose the same functions.
"""

import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and not os.environ.get("BQZETA_PURE"):
    BACKEND = "cython"
    _impl = _ckernels
else:
    BACKEND = "python"
    _impl = _pykernels

r2_counts = _impl.r2_counts
divisor_class_counts = _impl.divisor_class_counts
divisor_sum = _impl.divisor_sum
convolve_i64 = _impl.convolve_i64
dirichlet_sum = _impl.dirichlet_sum
lattice_sum = _impl.lattice_sum
primes_upto = _impl.primes_upto

__all__ = [
    "BACKEND",
    "BACKENDS",
    "convolve_i64",
    "dirichlet_sum",
    "divisor_class_counts",
    "divisor_sum",
    "lattice_sum",
    "primes_upto",
    "r2_counts",
]
