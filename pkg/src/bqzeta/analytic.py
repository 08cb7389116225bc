"""Numerical evaluation of gamma, Hurwitz/Riemann zeta and the quadratic L-functions.

All values are binary64 ``complex`` numbers.  Hurwitz zeta is evaluated by
Euler-Maclaurin summation, which continues it to the whole plane; the
L-functions of the quadratic characters are finite combinations of Hurwitz
values, so they are entire once the ``1/(s-1)`` parts cancel.  Those parts
are cancelled analytically, which makes ``dirichlet_beta(1)`` an ordinary
evaluation rather than a limit.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .errors import DomainError, PoleError
from .quadratic import QuadraticField

__all__ = [
    "EULER_GAMMA",
    "EvalResult",
    "GammaQi",
    "L_chi",
    "bqn_laurent_leading",
    "beta_funceq_residual",
    "constants",
    "digamma",
    "dirichlet_beta",
    "euler_product_qi",
    "functional_eq_residual",
    "gamma",
    "gamma_qi_constant",
    "hurwitz_zeta",
    "log_gamma",
    "riemann_zeta",
    "sierpinski_constant",
    "sierpinski_series",
    "zeta_bqn",
    "zeta_funceq_residual",
    "zeta_qi",
]

EULER_GAMMA = 0.57721566490153286061
LOG_PI = math.log(math.pi)
_EPS = 2.220446049250313e-16

POLE_DISTANCE = 1e-8
FUNCEQ_POLE_DISTANCE = 1e-6
DERIVATIVE_STEP = 1e-5


@dataclass(frozen=True)
class EvalResult:
    """A numerical value with an error *estimate* (not a rigorous bound)."""

    value: complex
    est_error: float
    method: str

    def to_dict(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "est_error": self.est_error,
            "method": self.method,
        }


def _bernoulli_even(count: int) -> list[Fraction]:
    """B_2, B_4, ..., B_{2*count} (Akiyama-Tanigawa)."""
    top = 2 * count
    a = [Fraction(0)] * (top + 1)
    out = []
    for m in range(top + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(a[0])
    return out


_BERNOULLI = _bernoulli_even(30)
# B_2j / (2j)!
_EM_COEFFS = [float(b / math.factorial(2 * j)) for j, b in enumerate(_BERNOULLI, start=1)]
# B_2k / (2k) for the digamma asymptotic series
_PSI_COEFFS = [float(b / (2 * k)) for k, b in enumerate(_BERNOULLI[:12], start=1)]


def _check_pole(s: complex, poles, what: str, distance: float = POLE_DISTANCE) -> None:
    for p in poles:
        if abs(s - p) < distance:
            raise PoleError(f"{what} has a pole at s={p}; got s={s}")


def _near_nonpositive_integer(z: complex, distance: float) -> bool:
    n = round(z.real)
    return n <= 0 and abs(z - n) < distance


# -- gamma -------------------------------------------------------------------

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _log_gamma_lanczos(z: complex) -> complex:
    """Principal log-gamma for Re(z) >= 1/2."""
    z = z - 1
    acc = _LANCZOS[0]
    for k in range(1, len(_LANCZOS)):
        acc += _LANCZOS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def _log_sin_pi(z: complex) -> complex:
    """Branch of log(sin(pi z)) continuous in the closed upper half plane.

    Real on (0, 1); its imaginary part stays within pi/2 of ``pi/2 - pi*Re(z)``.
    """
    v = cmath.log(cmath.sin(math.pi * z))
    target = 0.5 * math.pi - math.pi * z.real
    k = round((target - v.imag) / (2 * math.pi))
    return complex(v.real, v.imag + 2 * math.pi * k)


def log_gamma(s) -> complex:
    """Principal branch of log Gamma(s); reflection is used for Re(s) < 1/2.

    On the negative real axis the value is the limit from the upper half plane.
    """
    s = complex(s)
    if _near_nonpositive_integer(s, POLE_DISTANCE):
        raise PoleError(f"Gamma has a pole at {round(s.real)}")
    if s.real >= 0.5:
        return _log_gamma_lanczos(s)
    if s.imag < 0:
        return log_gamma(s.conjugate()).conjugate()
    return LOG_PI - _log_sin_pi(s) - _log_gamma_lanczos(1 - s)


def gamma(s) -> complex:
    return cmath.exp(log_gamma(s))


def digamma(s) -> complex:
    """Logarithmic derivative of Gamma: reflection, upward recurrence, asymptotic series."""
    z = complex(s)
    if _near_nonpositive_integer(z, POLE_DISTANCE):
        raise PoleError(f"digamma has a pole at {round(z.real)}")
    if z.real < 0.5:
        return digamma(1 - z) - math.pi * cmath.cos(math.pi * z) / cmath.sin(math.pi * z)
    acc = 0j
    while abs(z) < 12:
        acc -= 1 / z
        z += 1
    w = 1 / (z * z)
    series = 0j
    wk = w
    for c in _PSI_COEFFS:
        series += c * wk
        wk *= w
    return acc + cmath.log(z) - 0.5 / z - series


# -- Hurwitz zeta --------------------------------------------------------------


def _pole_part(s: complex, x: float) -> complex:
    """``(x**(1-s) - 1) / (s - 1)``, stable as s -> 1."""
    u = s - 1
    lx = math.log(x)
    z = -u * lx
    if abs(z) < 0.1:
        # (e^z - 1)/u = -lx * (1 + z/2! + z^2/3! + ...)
        term = 1 + 0j
        total = 1 + 0j
        for k in range(2, 12):
            term *= z / k
            total += term
        return -lx * total
    return (cmath.exp(z) - 1) / u


def _em_cutoff(s: complex, a: float) -> int:
    """Number of terms summed directly before the Euler-Maclaurin tail.

    The tail needs ``N + a`` comparable to ``|s|`` to converge within B_60,
    but the head sum grows like ``x**(1-Re s)``; for ``Re s < 0`` that
    growth is pure cancellation, so the cutoff is kept as small as the tail
    allows (0.6|s|, at least 7, at least |Im s|).
    """
    target = max(7.0, abs(s.imag), 0.6 * abs(s))
    return max(0, math.ceil(target - a))


def _hurwitz_regular(s: complex, a: float) -> tuple[complex, float]:
    """``zeta(s, a) - 1/(s-1)`` and an error estimate; finite at s = 1."""
    if a <= 0:
        raise DomainError(f"Hurwitz parameter must be positive, got {a}")
    N = _em_cutoff(s, a)
    head = 0j
    scale = 0.0
    for k in range(N):
        term = cmath.exp(-s * math.log(k + a))
        head += term
        scale += abs(term)
    x = N + a
    lx = math.log(x)
    xs = cmath.exp(-s * lx)  # x**-s
    total = head + _pole_part(s, x) + 0.5 * xs
    scale += abs(xs) * x
    # tail: sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * x**(-s-2j+1)
    rising = s
    power = xs / x  # x**(-s-1)
    inv_x2 = 1 / (x * x)
    last = 0.0
    for j, c in enumerate(_EM_COEFFS, start=1):
        term = c * rising * power
        total += term
        last = abs(term)
        if last <= _EPS * 0.01 * abs(total):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power *= inv_x2
    est = last + 4 * _EPS * (scale + abs(total)) + 2 * _EPS * abs(s) * abs(total)
    return total, est


def hurwitz_zeta(s, alpha: float) -> EvalResult:
    """Hurwitz zeta ``sum_{n>=0} (n + alpha)**-s``, continued to all s != 1."""
    s = complex(s)
    _check_pole(s, (1,), "Hurwitz zeta")
    reg, err = _hurwitz_regular(s, float(alpha))
    pole = 1 / (s - 1)
    value = reg + pole
    return EvalResult(value, err + _EPS * abs(pole), "euler-maclaurin")


def riemann_zeta(s) -> EvalResult:
    r = hurwitz_zeta(s, 1.0)
    return EvalResult(r.value, r.est_error, "hurwitz(s,1)")


def _character_L(s: complex, modulus: int, chi) -> tuple[complex, float]:
    """``modulus**-s * sum_r chi(r) zeta(s, r/modulus)`` for a character summing to 0."""
    total = 0j
    err = 0.0
    for r in range(1, modulus + 1):
        c = chi(r)
        if c:
            reg, e = _hurwitz_regular(s, r / modulus)
            total += c * reg
            err += e
    factor = cmath.exp(-s * math.log(modulus))
    value = factor * total
    return value, abs(factor) * err + 2 * _EPS * abs(value) * (1 + abs(s) * math.log(modulus))


def _chi_m4(r: int) -> int:
    return (0, 1, 0, -1)[r % 4]


def dirichlet_beta(s) -> EvalResult:
    """``L(chi_{-4}, s) = 4**-s (zeta(s, 1/4) - zeta(s, 3/4))``; entire."""
    s = complex(s)
    value, err = _character_L(s, 4, _chi_m4)
    return EvalResult(value, err, "hurwitz-difference")


def L_chi(field: QuadraticField, s) -> EvalResult:
    """L-function of the quadratic character of ``field`` via Hurwitz zeta."""
    s = complex(s)
    modulus = abs(field.delta)
    value, err = _character_L(s, modulus, field.chi)
    return EvalResult(value, err, f"hurwitz-sum mod {modulus}")


def zeta_qi(s) -> EvalResult:
    """Dedekind zeta of Q(i) as ``zeta(s) * L(chi_{-4}, s)``."""
    s = complex(s)
    _check_pole(s, (1,), "zeta_Q(i)")
    z = riemann_zeta(s)
    b = dirichlet_beta(s)
    value = z.value * b.value
    err = abs(z.value) * b.est_error + abs(b.value) * z.est_error
    return EvalResult(value, err, "zeta*beta")


def zeta_bqn(level: int, s) -> EvalResult:
    """Zeta function of BQ_n: ``zeta_Q(i)(s) ** 2**(level-1)``; pole of that order at 1."""
    if level < 2:
        raise DomainError(f"level must be >= 2, got {level}")
    s = complex(s)
    m = 1 << (level - 1)
    if abs(s - 1) < POLE_DISTANCE:
        raise PoleError(f"zeta_BQ{level} has a pole of order {m} at s=1")
    q = zeta_qi(s)
    value = q.value**m
    rel = q.est_error / abs(q.value) if q.value else 0.0
    return EvalResult(value, m * rel * abs(value) + m * _EPS * abs(value), f"zeta_qi^{m}")


def euler_product_qi(s, P: int) -> complex:
    """Truncated Euler product of zeta_Q(i) over primes p <= P."""
    import numpy as np

    s = complex(s)
    if s.real <= 1:
        raise DomainError(f"Euler product needs Re(s) > 1, got {s}")
    primes = kernels.primes_upto(int(P))
    logs = np.log(primes.astype(np.float64))
    x = np.exp(-s * logs)  # p**-s
    r = primes % 4
    log_factor = np.zeros(len(primes), dtype=complex)
    log_factor[r == 2] = -np.log1p(-x[r == 2])
    log_factor[r == 1] = -2 * np.log1p(-x[r == 1])
    log_factor[r == 3] = -np.log1p(-x[r == 3] ** 2)
    return complex(cmath.exp(complex(log_factor.sum())))


# -- functional equations --------------------------------------------------------


def _relative_residual(lhs: complex, rhs: complex) -> float:
    denom = abs(lhs) + abs(rhs)
    if denom == 0:
        return 0.0
    return abs(lhs - rhs) / denom


def _check_funceq_point(s: complex) -> None:
    n = round(s.real)
    if abs(s - n) < FUNCEQ_POLE_DISTANCE:
        raise DomainError(f"s={s} is within {FUNCEQ_POLE_DISTANCE} of a pole of one of the factors")


def _completed_qi(s: complex) -> complex:
    """``pi**-s * Gamma(s) * zeta_Q(i)(s)``, symmetric under s -> 1-s."""
    return cmath.exp(log_gamma(s) - s * LOG_PI) * zeta_qi(s).value


def functional_eq_residual(level: int, s) -> float:
    """Symmetric relative residual of the BQ_n functional equation at ``s``."""
    if level < 2:
        raise DomainError(f"level must be >= 2, got {level}")
    s = complex(s)
    _check_funceq_point(s)
    m = 1 << (level - 1)
    lhs = _completed_qi(1 - s) ** m
    rhs = _completed_qi(s) ** m
    return _relative_residual(lhs, rhs)


def beta_funceq_residual(s) -> float:
    """Residual of ``beta(1-s) = (pi/2)**-s sin(pi s/2) Gamma(s) beta(s)``."""
    s = complex(s)
    _check_funceq_point(s)
    lhs = dirichlet_beta(1 - s).value
    rhs = cmath.exp(-s * math.log(math.pi / 2) + log_gamma(s)) * cmath.sin(math.pi * s / 2)
    rhs *= dirichlet_beta(s).value
    return _relative_residual(lhs, rhs)


def zeta_funceq_residual(s) -> float:
    """Residual of ``zeta(1-s) = zeta(s) / (2**s pi**(s-1) sin(pi s/2) Gamma(1-s))``."""
    s = complex(s)
    _check_funceq_point(s)
    lhs = riemann_zeta(1 - s).value
    denom = cmath.exp(s * math.log(2) + (s - 1) * LOG_PI + log_gamma(1 - s))
    denom *= cmath.sin(math.pi * s / 2)
    rhs = riemann_zeta(s).value / denom
    return _relative_residual(lhs, rhs)


# -- constants ----------------------------------------------------------------


class GammaQi(NamedTuple):
    closed_form: float
    log_form: float
    finite_difference: float


def _beta_derivative_at_1(h: float = DERIVATIVE_STEP) -> float:
    return ((dirichlet_beta(1 + h).value - dirichlet_beta(1 - h).value) / (2 * h)).real


def gamma_qi_constant() -> GammaQi:
    """Euler constant of Q(i): ``L'(chi_{-4},1) + gamma * L(chi_{-4},1)``.

    Three evaluations: the gamma-function closed form, the equivalent
    logarithmic form, and a central difference of ``dirichlet_beta``.
    """
    lg14 = log_gamma(0.25).real
    lg34 = log_gamma(0.75).real
    closed = 0.5 * math.pi * (EULER_GAMMA + math.log(2) + 1.5 * LOG_PI - 2 * lg14)
    log_form = 0.25 * math.pi * (math.log(2 * math.pi) + 2 * EULER_GAMMA + 2 * (lg34 - lg14))
    L1 = dirichlet_beta(1).value.real
    fd = _beta_derivative_at_1() + EULER_GAMMA * L1
    return GammaQi(closed, log_form, fd)


def sierpinski_constant() -> float:
    """``gamma + L'(chi_{-4},1)/L(chi_{-4},1) = log(2 pi e^{2 gamma} Gamma(3/4)^2 / Gamma(1/4)^2)``."""
    lg14 = log_gamma(0.25).real
    lg34 = log_gamma(0.75).real
    return math.log(2 * math.pi) + 2 * EULER_GAMMA + 2 * (lg34 - lg14)


def sierpinski_series(terms: int = 40) -> float:
    """``pi/3 - log 4 + 2 gamma - 4 sum_k log(1 - e^{-2 pi k})`` truncated after ``terms``."""
    tail = 0.0
    for k in range(1, terms + 1):
        tail += math.log1p(-math.exp(-2 * math.pi * k))
    return math.pi / 3 - math.log(4) + 2 * EULER_GAMMA - 4 * tail


def bqn_laurent_leading(level: int, h: float = 1e-4) -> dict:
    """Two leading Laurent coefficients of zeta_BQn at its pole s = 1.

    With ``m = 2**(level-1)``, ``g(e) = e**m * zeta_BQn(1+e)`` is analytic;
    ``g(0)`` is the order-``m`` coefficient and ``g'(0)`` (central difference)
    the order-``m-1`` one.  The latter is compared with the closed value
    ``m (pi/4)**(m-1) gamma_Q(i)`` and with ``(pi/2) gamma_Q(i)``.
    """
    m = 1 << (level - 1)
    L1 = dirichlet_beta(1).value.real

    def g(e):
        return (e**m * zeta_bqn(level, 1 + e).value).real

    leading = L1**m
    second = (g(h) - g(-h)) / (2 * h)
    gq = gamma_qi_constant().closed_form
    return {
        "pole_order": m,
        "coeff_order_m": leading,
        "coeff_order_m_minus_1": second,
        "coeff_order_m_minus_1_closed": m * L1 ** (m - 1) * gq,
        "half_pi_gamma_qi": 0.5 * math.pi * gq,
    }


def constants() -> dict:
    from .quadratic import regulator

    gq = gamma_qi_constant()
    return {
        "L1": dirichlet_beta(1).value.real,
        "gamma_qi": gq.closed_form,
        "gamma_qi_finite_difference": gq.finite_difference,
        "sierpinski": sierpinski_constant(),
        "regulator_2": regulator(2),
    }
