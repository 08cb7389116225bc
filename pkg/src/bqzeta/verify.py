"""Static registry of reproduction checks run by ``bqzeta verify``.

Each check returns a :class:`ReportEntry`.  The registry is ordered by
``check_id`` and every check is deterministic (fixed seeds, no timings in the
report), so two runs of the same profile serialize identically.
"""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import analytic as an
from . import gaussian as gs
from . import kernels
from . import multicomplex as mc
from . import quadratic as qf
from . import series as sr

REGISTRY_VERSION = 1

PROFILES = ("quick", "full")


@dataclass(frozen=True)
class ReportEntry:
    check_id: str
    paper_anchor: str
    expected: str
    actual: str
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> ReportEntry:
        return cls(
            check_id=str(data["check_id"]),
            paper_anchor=str(data["paper_anchor"]),
            expected=str(data["expected"]),
            actual=str(data["actual"]),
            tolerance=float(data["tolerance"]),
            passed=bool(data["passed"]),
        )


@dataclass(frozen=True)
class Check:
    check_id: str
    paper_anchor: str
    run: Callable[[str], tuple[str, str, float, bool]]


def _close(expected: float, actual: float, tol: float) -> tuple[str, str, float, bool]:
    return repr(expected), repr(actual), tol, abs(expected - actual) <= tol


def _max_dev(devs, tol: float, label: str) -> tuple[str, str, float, bool]:
    worst = max(devs)
    return f"{label} <= {tol!r}", f"max {worst!r}", tol, worst <= tol


def _exact(expected, actual) -> tuple[str, str, float, bool]:
    return str(expected), str(actual), 0.0, expected == actual


# -- coefficient checks --------------------------------------------------------

_QI_EXPANSION = {1: 1, 2: 1, 4: 1, 5: 2, 8: 1, 9: 1, 10: 2, 13: 2, 16: 1, 17: 2, 18: 1, 20: 2, 25: 3}


def _coeffs_qi(profile):
    expected = tuple(_QI_EXPANSION.get(n, 0) for n in range(1, 26))
    return _exact(expected, sr.coeffs_zeta_qi(25).values)


def _coeffs_bq(profile):
    return _exact((1, 2, 0, 3, 4), sr.coeffs_bqn(2, 5).values)


def _bq_primes(profile):
    N = 10**4 if profile == "quick" else 10**5
    A = sr.coeffs_bqn(2, N)
    r2 = gs.r2_table(N)
    bad = [int(p) for p in kernels.primes_upto(N) if 2 * A[int(p)] != r2[p] or (p % 4 == 1 and A[int(p)] != 4)]
    return "A_p = r2(p)/2, and 4 for p = 1 mod 4", f"{len(bad)} failures", 0.0, not bad


# -- special values --------------------------------------------------------------


def _beta_one(profile):
    return _close(math.pi / 4, an.dirichlet_beta(1).value.real, 1e-12)


def _digamma_L1(profile):
    val = 0.25 * (an.digamma(0.75) - an.digamma(0.25)).real
    return _close(math.pi / 4, val, 1e-12)


def _residue_qi(profile):
    eps = 1e-6
    return _close(math.pi / 4, (eps * an.zeta_qi(1 + eps).value).real, 1e-5)


def _sierpinski(profile):
    return _close(0.8228252, an.sierpinski_constant(), 1e-6)


def _sierpinski_forms(profile):
    log_form = an.sierpinski_constant()
    series_form = an.sierpinski_series(40)
    ratio_form = an.gamma_qi_constant().closed_form / an.dirichlet_beta(1).value.real
    forms = (log_form, series_form, ratio_form)
    devs = [abs(a - b) for i, a in enumerate(forms) for b in forms[i + 1 :]]
    return _max_dev(devs, 1e-9, "pairwise difference")


def _gamma_qi(profile):
    g = an.gamma_qi_constant()
    return _close(g.closed_form, g.finite_difference, 1e-6)


def _class_number(profile):
    field = qf.QuadraticField(-1)
    return _close(2 * math.pi * 1 / (4 * math.sqrt(4)), qf.L_chi_at_1(field), 1e-12)


def _pell(profile):
    x, y = qf.pell_fundamental(2)
    ok = (x, y) == (3, 2)
    dev = abs(math.log(3 + 2 * math.sqrt(2)) / 2 - math.log(1 + math.sqrt(2)))
    return "(3, 2); |log(3+2√2)/2 - log(1+√2)| <= 1e-14", f"{(x, y)}; {dev!r}", 1e-14, ok and dev <= 1e-14


# -- analytic identities ------------------------------------------------------------


def _grid(count: int, re_lo: float, re_hi: float, im_max: float, seed: int) -> list[complex]:
    rng = random.Random(seed)
    return [complex(rng.uniform(re_lo, re_hi), rng.uniform(-im_max, im_max)) for _ in range(count)]


def factorization_grid() -> list[complex]:
    return _grid(50, 1.1, 4.0, 10.0, seed=20240501)


def funceq_grid() -> list[complex]:
    """30 points off the real axis, so no factor is near a pole."""
    pts = _grid(30, -1.5, 2.5, 10.0, seed=20240502)
    return [complex(s.real, s.imag if abs(s.imag) > 0.05 else 0.5) for s in pts]


def _factorization(profile):
    field = qf.QuadraticField(-1)
    devs = [
        abs(an.zeta_qi(s).value - an.riemann_zeta(s).value * an.L_chi(field, s).value)
        for s in factorization_grid()
    ]
    return _max_dev(devs, 1e-12, "|zeta_qi - zeta*L|")


def _local_factors(profile):
    field = qf.QuadraticField(-1)
    s = 2
    devs = []
    for p in kernels.primes_upto(100):
        p = int(p)
        rhs = (1 - p**-s) * (1 - qf.chi_K(field, p) * p**-s)
        devs.append(abs(qf.local_factor(field, p, s) - rhs))
    return _max_dev(devs, 1e-14, "local factor deviation")


def _funceq(profile):
    devs = [an.functional_eq_residual(n, s) for n in (2, 3, 4) for s in funceq_grid()]
    return _max_dev(devs, 1e-8, "relative residual")


def _euler(profile):
    P = 10**4 if profile == "quick" else 10**5
    return _close(an.zeta_qi(3).value.real, an.euler_product_qi(3, P).real, 1e-8)


def _bq_partial(profile):
    N = 10**4 if profile == "quick" else 10**5
    return _close(an.zeta_bqn(2, 3).value.real, sr.partial_sum(sr.coeffs_bqn(2, N), 3).value.real, 1e-7)


def _lattice(profile):
    M = 500 if profile == "quick" else 2000
    return _close(an.zeta_qi(3).value.real, (kernels.lattice_sum(M, 3) / 4).real, 1e-6)


# -- Gaussian integers ---------------------------------------------------------------


def _r2_identities(profile):
    N = 10**4 if profile == "quick" else 10**5
    brute = gs.r2_table(N)
    divisor = gs.r2_divisor_table(N)
    s1, s3 = gs.sigma_table(N)
    bad = np.flatnonzero((brute[1:] != divisor[1:]) | (brute[1:] != 4 * (s1[1:] - s3[1:])))
    return f"r2 = 4 sum chi(d) = 4(s1 - s3) for n <= {N}", f"{len(bad)} mismatches", 0.0, len(bad) == 0


def _fermat(profile):
    N = 10**4 if profile == "quick" else 10**5
    r2 = gs.r2_table(N)
    primes = kernels.primes_upto(N)
    ones = primes[primes % 4 == 1]
    threes = primes[primes % 4 == 3]
    bad = int(np.count_nonzero(r2[ones] != 8) + np.count_nonzero(r2[threes] != 0))
    return f"r2(p) = 8 (p=1 mod 4), 0 (p=3 mod 4), p <= {N}", f"{bad} failures", 0.0, bad == 0


def _splitting(profile):
    N = 10**4
    field = qf.QuadraticField(-1)
    r2 = gs.r2_table(N)
    bad = 0
    for p in kernels.primes_upto(N):
        p = int(p)
        kind = qf.splitting_type(field, p)
        if p == 2:
            bad += kind is not qf.SplittingType.RAMIFIED
        else:
            bad += (kind is qf.SplittingType.SPLIT) != (r2[p] > 0)
    return "split iff r2(p) > 0, 2 ramified", f"{bad} failures", 0.0, bad == 0


def _characters(profile):
    bad = 0
    for d in (-1, -3, 2, 3, -2, 6):
        field = qf.QuadraticField(d)
        for m in range(-1000, 1001):
            if math.gcd(m, field.delta) == 1 and qf.dirichlet_chi(field, m) != qf.chi_K(field, m):
                bad += 1
    return "piecewise Dirichlet character = (Delta/m)", f"{bad} disagreements", 0.0, bad == 0


# -- multicomplex ---------------------------------------------------------------------


def _random_mc(rng: random.Random, level: int) -> mc.Multicomplex:
    return mc.Multicomplex(level, [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(1 << level)])


def _homomorphism(profile):
    pairs = 100 if profile == "quick" else 1000
    rng = random.Random(7)
    bad = 0
    for level in (2, 3, 4):
        for _ in range(pairs):
            z, w = _random_mc(rng, level), _random_mc(rng, level)
            if mc.to_idempotent(z * w) != mc.to_idempotent(z) * mc.to_idempotent(w):
                bad += 1
    return f"{pairs} pairs per level, exact", f"{bad} failures", 0.0, bad == 0


def bicomplex_formula(x):
    x1, x2, x3, x4 = x
    return [(x1 + x4, x2 - x3), (x1 - x4, x2 + x3)]


def tricomplex_formula(x):
    x1, x2, x3, x4, x5, x6, x7, x8 = x
    return [
        (x1 + x7 + x4 - x6, x2 + x8 - x3 + x5),
        (x1 + x7 - x4 + x6, x2 + x8 + x3 - x5),
        (x1 - x7 + x4 + x6, x2 - x8 - x3 - x5),
        (x1 - x7 - x4 - x6, x2 - x8 + x3 + x5),
    ]


def _coordinate_formulas(profile):
    bad = 0
    for level, formula in ((2, bicomplex_formula), (3, tricomplex_formula)):
        size = 1 << level
        for k in range(size):
            basis = [int(i == k) for i in range(size)]
            got = [(c.re, c.im) for c in mc.to_idempotent(mc.Multicomplex(level, basis)).components]
            if got != formula(basis):
                bad += 1
    return "basis sweep, n = 2 and n = 3", f"{bad} mismatches", 0.0, bad == 0


CHECKS: tuple[Check, ...] = tuple(
    sorted(
        (
            Check("C01-coeffs-qi", "1 + 1/2^s + 1/4^s + 2/5^s + ...", _coeffs_qi),
            Check("C02-coeffs-bq", "A_1=1, A_2=2, A_3=0, A_4=3, A_5=4", _coeffs_bq),
            Check("C03-beta-1", "π/4", _beta_one),
            Check("C04-sierpinski", "0.8228252...", _sierpinski),
            Check("C05-sierpinski-forms", "log(2π e^{2γ} Γ(3/4)²/Γ(1/4)²) = π/3 − log 4 + 2γ − 4Σ log(1−e^{−2πk})", _sierpinski_forms),
            Check("C06-factorization", "ζ_K(s) = ζ(s) L(χ_K, s)", _factorization),
            Check("C07-local-factors", "(1−p^{−s})(1−χ_K(p)p^{−s})", _local_factors),
            Check("C08-funceq", "π^{−(2−2s)} Γ²(1−s) ζ_BQ(1−s) = π^{−2s} Γ²(s) ζ_BQ(s)", _funceq),
            Check("C09-r2-identities", "r_2(n) = 4(σ0^(1)(n) − σ0^(3)(n))", _r2_identities),
            Check("C10-fermat", "r_2(p) = 8", _fermat),
            Check("C11-homomorphism", "Z·W = (a1 b1) e + (a2 b2) e†", _homomorphism),
            Check("C12-coordinate-maps", "x1 + i x2 + j x3 + k x4 ↦ ((x1+x4) + i(x2−x3), (x1−x4) + i(x2+x3))", _coordinate_formulas),
            Check("C13-euler-product", "1/(1−2^{−s}) Π_{p≡1} 1/(1−p^{−s})² Π_{p≡3} 1/(1−p^{−2s})", _euler),
            Check("C14-bq-partial-sum", "ζ_BQ(s) = ζ(s)² L(χ_{−4}, s)²", _bq_partial),
            Check("C15-lattice-sum", "(1/4) Σ_{(m,n)≠(0,0)} (m²+n²)^{−s}", _lattice),
            Check("C16-pell-regulator", "R_2 = log(1+√2)", _pell),
            Check("C17-class-number", "2πh/(w√|Δ|) = L(χ_K, 1)", _class_number),
            Check("C18-bq-primes", "A_n = r_2(n)/2 for prime n", _bq_primes),
            Check("C19-characters", "χ_K(m) = (Δ/m)", _characters),
            Check("C20-residue-qi", "Res_{s=1} ζ_Q(i)(s) = L(χ_{−4}, 1)", _residue_qi),
            Check("C21-gamma-qi", "γ_Q(i) = L'(χ_{−4}, 1) + γ L(χ_{−4}, 1)", _gamma_qi),
            Check("C22-digamma-L1", "L(χ_{−4},1) = ¼(Γ'/Γ(3/4) − Γ'/Γ(1/4))", _digamma_L1),
            Check("C23-splitting", "2 = i(1−i)², 5 = (2+i)(2−i)", _splitting),
        ),
        key=lambda c: c.check_id,
    )
)


def run_check(check: Check, profile: str) -> ReportEntry:
    expected, actual, tol, passed = check.run(profile)
    return ReportEntry(check.check_id, check.paper_anchor, expected, actual, float(tol), bool(passed))


def run_verify(profile: str = "quick", workers: int = 1) -> list[ReportEntry]:
    """Run every registered check; with ``workers > 1`` they run on a thread pool.

    The report is in ``check_id`` order either way.
    """
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    if workers <= 1:
        return [run_check(c, profile) for c in CHECKS]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: run_check(c, profile), CHECKS))


def report_to_json(entries: list[ReportEntry]) -> str:
    return json.dumps(
        {"registry_version": REGISTRY_VERSION, "entries": [e.to_dict() for e in entries]},
        ensure_ascii=False,
        indent=2,
    )


def report_from_json(text: str) -> list[ReportEntry]:
    return [ReportEntry.from_dict(e) for e in json.loads(text)["entries"]]
