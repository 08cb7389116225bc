"""Multicomplex rational algebras and their Dedekind-like zeta functions.

Submodules:

multicomplex
    exact arithmetic in BQ_n and its idempotent decomposition
quadratic
    Kronecker symbols, quadratic characters, splitting, L(chi, 1), Pell units
gaussian
    sums of two squares and divisor-class counts in Z[i]
series
    exact Dirichlet coefficient tables and truncated sums
analytic
    gamma, Hurwitz/Riemann zeta, Dirichlet beta, zeta_Q(i), zeta_BQn
verify
    the registry of numerical checks behind ``bqzeta verify``
"""

from .analytic import (
    EvalResult,
    L_chi,
    dirichlet_beta,
    functional_eq_residual,
    gamma_qi_constant,
    hurwitz_zeta,
    riemann_zeta,
    sierpinski_constant,
    zeta_bqn,
    zeta_qi,
)
from .errors import (
    ArgumentError,
    BoundError,
    BQZetaError,
    DomainError,
    ParseError,
    PoleError,
    ZeroDivisorError,
)
from .kernels import BACKEND
from .multicomplex import (
    ComplexRational,
    IdempotentVector,
    Multicomplex,
    from_idempotent,
    idempotent_set,
    is_zero_divisor,
    mc_inverse,
    to_idempotent,
)
from .quadratic import QuadraticField, SplittingType, chi_K, kronecker_symbol
from .series import CoefficientTable, coeffs_bqn, coeffs_zeta_qi, dirichlet_convolve, partial_sum

__version__ = "0.1.0"
