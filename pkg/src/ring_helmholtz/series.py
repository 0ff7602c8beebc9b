"""
Single-index series for the coefficient and its even/odd parts.

Notation: m mode, a = m + 1/2, k^2 = x, gamma, lambda = beta sqrt(2 r R),
omega, s = sqrt(omega^2 - 1), xi = omega / s.

Hankel family (far field; fewer terms as the distance grows)::

    G = i/(2 sqrt(rR)) sum_n c_n H1_{n+a}(gamma),
    c_n = Gamma(n+a) / (Gamma(n+2m+1) n!) (gamma k^2 / 2)^(n+a)

with the Y part giving Lambda_+ and the J part Lambda_-.

Legendre family (near field; few terms close to the ring).  With the scaled
toroidal ladder b_mu = s^mu QQ^mu_{m-1/2}(omega) (see specfun)::

    sqrt(rR) Lambda_+ = (-1)^m sum_p (-lambda^2/4)^p b_p / (p! Gamma(p-m+1/2))
    sqrt(rR) Lambda_- = i (lambda/2)^(2m+1)
                        sum_p (-lambda^2/4)^p b_{p+m+1/2} / (p! Gamma(p+m+3/2))

The odd part is evaluated by default in the equivalent polynomial form with
pi_n = s^n P^m_n(xi)::

    Lambda_- = sqrt(pi) i lambda / (2 sqrt(2rR)) (lambda^2/4)^m
               sum_p (-lambda^2/4)^p pi_{p+m} / (Gamma(p+m+3/2) Gamma(p+2m+1))

Unified P series (both parts interleaved)::

    G = (-1)^m / sqrt(2rR) sum_n (i lambda)^n / n! Gamma((n+1)/2)/Gamma(m+(n+1)/2)
        s^((n-1)/2) P^m_{(n-1)/2}(xi)

1F2 series for the odd part (a row summation of the Kampe de Feriet form)::

    Lambda_- = i sqrt(pi) / (m! sqrt(rR)) (gamma k / 4)^(2m+1)
               sum_n (-gamma^2/4)^n / (Gamma(n+m+3/2) n!)
               1F2(m+1/2; n+m+3/2, 2m+1; gamma^2 k^2 / 4)

Every scaled quantity above stays finite as omega -> 1, so the Legendre
forms remain accurate at distances of 1e-9 from the ring.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np
from scipy import special as sc

from .errors import ConvergenceError, DomainError
from .hyper2d import DEFAULT_POLICY, MethodReport, SeriesPolicy
from .params import Dimensionless
from .specfun import bessel_half_ladder, csum, hyp1f2, toroidal_q_ladder

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class CoeffValue:
    """A coefficient with its even (plus) and odd (minus) parts in beta."""

    total: complex
    plus: complex
    minus: complex

    @classmethod
    def from_report(cls, rep: MethodReport) -> "CoeffValue":
        if rep.plus is None or rep.minus is None:
            raise ValueError(f"method {rep.method} does not provide the split")
        return cls(rep.value, rep.plus, rep.minus)


# --------------------------------------------------------------------------
# truncation
# --------------------------------------------------------------------------

@dataclass
class _Trunc:
    value: complex
    terms_used: int
    est_error: float
    terms: np.ndarray


def _truncate(terms: np.ndarray, policy: SeriesPolicy) -> _Trunc | None:
    """Find the stopping point of a term sequence, or None if not yet converged.

    Stops at the first index ending a run of ``stagnation_window`` terms each
    below rel_tol * |partial sum|.  terms_used counts up to the last term that
    was not negligible; the quiet run is still included in the sum.
    """
    if not np.all(np.isfinite(terms)):
        bad = int(np.argmin(np.isfinite(terms)))
        raise ConvergenceError(f"series terms overflow at index {bad}")
    part = np.cumsum(terms)
    small = np.abs(terms) <= policy.rel_tol * np.abs(part)
    w = policy.stagnation_window
    run = 0
    last_big = -1
    for i, q in enumerate(small):
        if q:
            run += 1
            if run >= w:
                used = terms[: i + 1]
                tail = float(np.max(np.abs(terms[i + 1 - w: i + 1])))
                est = tail + _EPS * float(np.sum(np.abs(used)))
                return _Trunc(csum(used), last_big + 1, est, used)
        else:
            run = 0
            last_big = i
    return None


def _adaptive(make_terms: Callable[[int], np.ndarray], policy: SeriesPolicy, start: int = 48) -> _Trunc:
    n = max(start, 2 * policy.stagnation_window)
    while True:
        n_eff = min(n, policy.max_terms)
        res = _truncate(make_terms(n_eff), policy)
        if res is not None:
            return res
        if n_eff >= policy.max_terms:
            raise ConvergenceError(f"series did not converge within {policy.max_terms} terms")
        n *= 2


def _finish(tr: _Trunc, factor: complex, method: str, policy: SeriesPolicy,
            plus: bool | None = None) -> MethodReport:
    value = tr.value * factor
    est = tr.est_error * abs(factor)
    rep = MethodReport(
        value=value,
        method=method,
        terms_used=tr.terms_used,
        est_error=est,
        converged=est <= policy.rel_tol * abs(value),
        terms=tr.terms * factor,
    )
    if plus is True:
        rep.plus = value
    elif plus is False:
        rep.minus = value
    return rep


def _combine(method: str, plus: MethodReport, minus: MethodReport, policy: SeriesPolicy) -> MethodReport:
    value = plus.value + minus.value
    est = plus.est_error + minus.est_error
    return MethodReport(
        value=value,
        method=method,
        terms_used=max(plus.terms_used, minus.terms_used),
        est_error=est,
        converged=est <= policy.rel_tol * abs(value),
        plus=plus.value,
        minus=minus.value,
    )


# --------------------------------------------------------------------------
# Bessel / Hankel family
# --------------------------------------------------------------------------

def _bessel_terms(d: Dimensionless, kind: str, n_terms: int) -> np.ndarray:
    """c_n F_{n+a}(gamma) for n < n_terms, F in {J, Y}."""
    if d.gamma == 0:
        raise DomainError("Bessel-type series need gamma != 0")
    m = d.m
    mant, lsc = bessel_half_ladder(kind, m + n_terms - 1, d.gamma, d.gamma_lo)
    n = np.arange(n_terms)
    nu = n + m + 0.5
    log_arg = cmath.log(d.gamma * d.k2 / 2.0)
    logc = sc.gammaln(nu) - sc.gammaln(n + 2 * m + 1.0) - sc.gammaln(n + 1.0) + nu * log_arg
    return mant[m:] * np.exp(logc + lsc[m:])


def eval_bessely_series(d: Dimensionless, rR: float | None = None,
                        policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Even part Lambda_+ = -1/(2 sqrt(rR)) sum_n c_n Y_{n+m+1/2}(gamma)."""
    rR = d.rR if rR is None else rR
    tr = _adaptive(lambda n: _bessel_terms(d, "Y", n), policy)
    return _finish(tr, -0.5 / math.sqrt(rR), "bessel_y", policy, plus=True)


def eval_besselj_series(d: Dimensionless, rR: float | None = None,
                        policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Odd part Lambda_- = i/(2 sqrt(rR)) sum_n c_n J_{n+m+1/2}(gamma)."""
    rR = d.rR if rR is None else rR
    tr = _adaptive(lambda n: _bessel_terms(d, "J", n), policy)
    return _finish(tr, 0.5j / math.sqrt(rR), "bessel_j", policy, plus=False)


def eval_bessel_jy(d: Dimensionless, rR: float | None = None,
                   policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Full coefficient as the Y series plus the J series, each truncated separately."""
    return _combine("bessel_jy", eval_bessely_series(d, rR, policy),
                    eval_besselj_series(d, rR, policy), policy)


def eval_hankel_series(d: Dimensionless, rR: float | None = None,
                       policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Full coefficient G = i/(2 sqrt(rR)) sum_n c_n H1_{n+m+1/2}(gamma).

    terms_used counts the Hankel terms that were not negligible.  The even
    and odd parts are the Y and J sums over the same terms.
    """
    rR = d.rR if rR is None else rR
    store: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    def make(n):
        tj = _bessel_terms(d, "J", n)
        ty = _bessel_terms(d, "Y", n)
        store[n] = (tj, ty)
        return tj + 1j * ty

    tr = _adaptive(make, policy)
    tj, ty = store[max(store)]
    used = tr.terms.size
    pref = 0.5j / math.sqrt(rR)
    rep = _finish(tr, pref, "hankel", policy)
    rep.plus = pref * 1j * csum(ty[:used])
    rep.minus = pref * csum(tj[:used])
    return rep


# --------------------------------------------------------------------------
# Legendre family
# --------------------------------------------------------------------------

def _legendre_plus_terms(d: Dimensionless, n_terms: int) -> np.ndarray:
    m = d.m
    b = toroidal_q_ladder(m, max(n_terms - 1, 1), d.omega, d.omega_m1)[:n_terms]
    q = -d.lam * d.lam / 4.0
    c = np.empty(n_terms, dtype=complex)
    # 1/Gamma(1/2 - m) = (-1)^m Gamma(m + 1/2) / pi
    c[0] = (-1) ** m * sc.gamma(m + 0.5) / math.pi
    for p in range(n_terms - 1):
        c[p + 1] = c[p] * q / ((p + 1) * (p - m + 0.5))
    with np.errstate(over="ignore", invalid="ignore"):
        return c * b


def eval_legendre_plus_series(d: Dimensionless, rR: float | None = None,
                              policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Even part from toroidal harmonics Q^p_{m-1/2}(omega), p = 0, 1, 2, ..."""
    rR = d.rR if rR is None else rR
    tr = _adaptive(lambda n: _legendre_plus_terms(d, n), policy, start=24)
    return _finish(tr, (-1) ** d.m / math.sqrt(rR), "legendre_plus", policy, plus=True)


def _scaled_p_poly(m: int, n_terms: int, omega: float, s2: float) -> np.ndarray:
    """pi_n = s^n P^m_n(xi) for n = m .. m + n_terms - 1."""
    out = np.empty(n_terms + 1)
    out[0] = math.exp(sc.gammaln(2 * m + 1) - sc.gammaln(m + 1) - m * math.log(2.0))
    out[1] = (2 * m + 1) * omega * out[0]
    with np.errstate(over="ignore", invalid="ignore"):
        for j in range(1, n_terms):
            n = m + j
            out[j + 1] = ((2 * n + 1) * omega * out[j] - (n + m) * s2 * out[j - 1]) / (n - m + 1)
    return out[:n_terms]


def _legendre_minus_terms_p(d: Dimensionless, n_terms: int) -> np.ndarray:
    m = d.m
    s2 = d.omega_m1 * (d.omega + 1.0)
    poly = _scaled_p_poly(m, n_terms, d.omega, s2)
    q = -d.lam * d.lam / 4.0
    e = np.empty(n_terms, dtype=complex)
    e[0] = math.exp(-sc.gammaln(m + 1.5) - sc.gammaln(2 * m + 1.0))
    for p in range(n_terms - 1):
        e[p + 1] = e[p] * q / ((p + m + 1.5) * (p + 2 * m + 1))
    with np.errstate(over="ignore", invalid="ignore"):
        return e * poly


def _legendre_minus_terms_q(d: Dimensionless, n_terms: int) -> np.ndarray:
    m = d.m
    bh = toroidal_q_ladder(m, m + n_terms, d.omega, d.omega_m1, half=True)[m: m + n_terms]
    q = -d.lam * d.lam / 4.0
    e = np.empty(n_terms, dtype=complex)
    e[0] = math.exp(-sc.gammaln(m + 1.5))
    for p in range(n_terms - 1):
        e[p + 1] = e[p] * q / ((p + 1) * (p + m + 1.5))
    with np.errstate(over="ignore", invalid="ignore"):
        return e * bh


def eval_legendre_minus_series(d: Dimensionless, rR: float | None = None,
                               policy: SeriesPolicy = DEFAULT_POLICY,
                               form: Literal["p", "q"] = "p") -> MethodReport:
    """Odd part from associated Legendre functions.

    ``form="p"`` uses the polynomials s^n P^m_n(xi) (default);
    ``form="q"`` uses the half-integer order toroidal ladder
    b_{p+m+1/2}.  The two agree term by term through Whipple's relation.
    """
    rR = d.rR if rR is None else rR
    m = d.m
    if d.lam == 0:
        return MethodReport(0j, f"legendre_minus_{form}", 0, 0.0, True, minus=0j, terms=np.zeros(1))
    if form == "p":
        tr = _adaptive(lambda n: _legendre_minus_terms_p(d, n), policy, start=24)
        factor = (math.sqrt(math.pi) * 1j * d.lam / (2.0 * math.sqrt(2.0 * rR))
                  * (d.lam * d.lam / 4.0) ** m)
    elif form == "q":
        tr = _adaptive(lambda n: _legendre_minus_terms_q(d, n), policy, start=24)
        factor = 1j / math.sqrt(rR) * (d.lam / 2.0) ** (2 * m + 1)
    else:
        raise ValueError(f"unknown form {form!r}")
    return _finish(tr, factor, f"legendre_minus_{form}", policy, plus=False)


def eval_legendre_series(d: Dimensionless, rR: float | None = None,
                         policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Full coefficient from the two Legendre series."""
    return _combine("legendre", eval_legendre_plus_series(d, rR, policy),
                    eval_legendre_minus_series(d, rR, policy), policy)


def _half_degree_p(m: int, n_terms: int, d: Dimensionless) -> np.ndarray:
    """rho_q = s^(q-1/2) P^m_{q-1/2}(xi) for q = 0 .. n_terms - 1."""
    s2 = d.omega_m1 * (d.omega + 1.0)
    b = toroidal_q_ladder(m, 1, d.omega, d.omega_m1)
    out = np.empty(max(n_terms, 2) + 1)
    for p in (0, 1):
        out[p] = sc.poch(p - m + 0.5, 2 * m) * math.sqrt(2.0 / math.pi) * b[p]
    with np.errstate(over="ignore", invalid="ignore"):
        for q in range(1, n_terms):
            nu = q - 0.5
            out[q + 1] = ((2 * nu + 1) * d.omega * out[q] - (nu + m) * s2 * out[q - 1]) / (nu - m + 1)
    return out[:n_terms]


def _p_series_terms(d: Dimensionless, n_terms: int) -> np.ndarray:
    m = d.m
    n_even = (n_terms + 1) // 2
    n_odd = n_terms // 2
    rho_half = _half_degree_p(m, n_even, d)
    s2 = d.omega_m1 * (d.omega + 1.0)
    poly = np.zeros(n_odd)
    if n_odd > m:
        poly[m:] = _scaled_p_poly(m, n_odd - m, d.omega, s2)
    rho = np.empty(n_terms)
    rho[0::2] = rho_half
    rho[1::2] = poly
    n = np.arange(n_terms)
    coef = np.empty(n_terms, dtype=complex)
    z = 1j * d.lam
    coef[0] = 1.0
    for j in range(n_terms - 1):
        coef[j + 1] = coef[j] * z / (j + 1)
    # Gamma((n+1)/2) / Gamma(m + (n+1)/2) = 1 / ((n+1)/2)_m
    with np.errstate(over="ignore", invalid="ignore"):
        return coef / sc.poch((n + 1) / 2.0, m) * rho


def eval_p_series(d: Dimensionless, rR: float | None = None,
                  policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Full coefficient from the unified associated-Legendre P series.

    Even-index terms form the even part and odd-index terms the odd part.
    """
    rR = d.rR if rR is None else rR
    tr = _adaptive(lambda n: _p_series_terms(d, n), policy, start=48)
    factor = (-1) ** d.m / math.sqrt(2.0 * rR)
    rep = _finish(tr, factor, "p_series", policy)
    rep.plus = csum(rep.terms[0::2])
    rep.minus = csum(rep.terms[1::2])
    return rep


# --------------------------------------------------------------------------
# 1F2 series
# --------------------------------------------------------------------------

def _onef2_terms(d: Dimensionless, n_terms: int) -> np.ndarray:
    m = d.m
    u = d.y * d.k2
    v = -d.y
    out = np.empty(n_terms, dtype=complex)
    coef = math.exp(-sc.gammaln(m + 1.5)) + 0j
    for n in range(n_terms):
        f, _ = hyp1f2(m + 0.5, n + m + 1.5, 2 * m + 1.0, u)
        out[n] = coef * f
        coef *= v / ((n + m + 1.5) * (n + 1))
    return out


def eval_1f2_series(d: Dimensionless, rR: float | None = None,
                    policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Odd part Lambda_- as a series of 1F2 functions.

    A distinct expansion from the Legendre odd series: the sums agree but the
    individual terms do not.
    """
    rR = d.rR if rR is None else rR
    if d.gamma == 0:
        return MethodReport(0j, "onef2", 0, 0.0, True, minus=0j, terms=np.zeros(1))
    tr = _adaptive(lambda n: _onef2_terms(d, n), policy, start=24)
    factor = 1j * math.sqrt(math.pi) / (math.factorial(d.m) * math.sqrt(rR)) * (d.gamma * d.k / 4.0) ** (2 * d.m + 1)
    return _finish(tr, factor, "onef2", policy, plus=False)
