"""
Closed-form double hypergeometric series for the even and odd parts of the
coefficient.

The even part (in beta) is a Horn H3 series,

    H3(a, a, 2a; x, y) = sum_{n,p>=0} (a)_{n-p} (a)_n / ((2a)_n n! p!) x^n y^p,

and the odd part a Kampe de Feriet series,

    F(u, v) = sum_{n,p>=0} (a)_n / ((a+1)_{n+p} (2a)_n n! p!) u^n v^p,

with a = m + 1/2, x = k^2, y = gamma^2/4, u = gamma^2 k^2/4, v = -gamma^2/4.
Then

    Lambda_+ = Gamma(m+1/2) / (m! sqrt(pi r R)) (k/2)^(2m+1) H3,
    Lambda_- = i / (sqrt(r R) (2m+1)!) (gamma k / 2)^(2m+1) F,

and sqrt(rR) Lambda_+- = g_+-(x, y) depend on (x, y) only.

Both double series are summed along anti-diagonals n + p = N.  Each diagonal
is produced from the previous one by a vectorised term-ratio update, summed,
and the diagonal sums are combined with a correctly rounded sum.  Summation
stops once ``stagnation_window`` consecutive diagonals are negligible.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np
from scipy import special as sc

from .errors import ConvergenceError, DomainError
from .params import Dimensionless
from .specfun import csum

_EPS = np.finfo(float).eps

Order = Literal["diagonal", "n_outer", "p_outer"]


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation controls shared by every series.

    Attributes
    ----------
    rel_tol : float
        A term (or diagonal) is negligible below rel_tol * |partial sum|.
    max_terms : int
        Cap on the summation index.
    stagnation_window : int
        Number of consecutive negligible terms required to stop.
    """

    rel_tol: float = 1e-13
    max_terms: int = 5000
    stagnation_window: int = 8

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.stagnation_window < 2:
            raise ValueError("stagnation_window must be >= 2")

    @classmethod
    def from_env(cls, **kw) -> "SeriesPolicy":
        """Default policy with rel_tol taken from RING_HELMHOLTZ_TOL if set."""
        tol = os.environ.get("RING_HELMHOLTZ_TOL")
        if tol is not None and "rel_tol" not in kw:
            kw["rel_tol"] = float(tol)
        return cls(**kw)


DEFAULT_POLICY = SeriesPolicy()


@dataclass
class MethodReport:
    """Outcome of one evaluation method.

    Attributes
    ----------
    value : complex
    method : str
    terms_used : int
        Number of terms (series) or integrand evaluations (quadrature).
    est_error : float
        Absolute error estimate: truncation plus a rounding bound
        eps * sum |terms|.
    converged : bool
        True when ``est_error <= rel_tol * |value|`` (series) or the
        quadrature tolerance was met.
    plus, minus : complex or None
        Even and odd parts in beta when the method provides them.
    terms : ndarray or None
        Per-index contributions, for diagnostics.
    """

    value: complex
    method: str
    terms_used: int
    est_error: float
    converged: bool
    plus: complex | None = None
    minus: complex | None = None
    terms: np.ndarray | None = field(default=None, repr=False)

    def scaled(self, factor: complex, method: str | None = None) -> "MethodReport":
        return MethodReport(
            value=self.value * factor,
            method=method or self.method,
            terms_used=self.terms_used,
            est_error=self.est_error * abs(factor),
            converged=self.converged,
            plus=None if self.plus is None else self.plus * factor,
            minus=None if self.minus is None else self.minus * factor,
            terms=None if self.terms is None else self.terms * factor,
        )


# --------------------------------------------------------------------------
# generic double-series engine
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class _Family:
    """Term ratios of a double series t(n, p)."""

    ratio_n: Callable  # t(n+1, p) / t(n, p), vectorised over (n, p)
    ratio_p: Callable  # t(n, p+1) / t(n, p), vectorised over (n, p)


def _h3_family(a: float, x: float, y: complex) -> _Family:
    return _Family(
        ratio_n=lambda n, p: (a + n - p) * (a + n) * x / ((2 * a + n) * (n + 1)),
        ratio_p=lambda n, p: y / ((a + n - p - 1) * (p + 1)),
    )


def _kdf_family(a: float, u: complex, v: complex) -> _Family:
    return _Family(
        ratio_n=lambda n, p: (a + n) * u / ((a + 1 + n + p) * (2 * a + n) * (n + 1)),
        ratio_p=lambda n, p: v / ((p + 1) * (a + 1 + n + p)),
    )


@dataclass
class _DoubleSum:
    sums: np.ndarray  # one entry per weight row
    abs_sum: float
    tail: float
    count: int
    diag_sums: np.ndarray


def _sum_diagonal(fam: _Family, policy: SeriesPolicy, weights=None) -> _DoubleSum:
    """Anti-diagonal summation; ``weights(n, p)`` returns a (K, len) multiplier array."""
    tol, window = policy.rel_tol, policy.stagnation_window
    terms = np.array([1.0 + 0j])
    n = np.array([0])
    p = np.array([0])
    parts: list[np.ndarray] = []
    abs_sum = 0.0
    quiet = 0
    last_big = 0
    tail = 0.0
    for N in range(policy.max_terms):
        w = terms[None, :] if weights is None else weights(n, p) * terms[None, :]
        d = w.sum(axis=1)
        mag = np.abs(w).sum(axis=1)
        parts.append(d)
        abs_sum += float(mag.max())
        acc = np.abs(np.sum(parts, axis=0))
        if np.all(mag <= tol * acc):
            quiet += 1
            tail = max(tail, float(np.max(mag)))
            if quiet >= window:
                diag = np.array(parts)
                sums = np.array([csum(diag[:, k]) for k in range(diag.shape[1])])
                return _DoubleSum(sums, abs_sum, tail, last_big + 1, diag[:, 0])
        else:
            quiet = 0
            tail = 0.0
            last_big = N
        # next diagonal: every entry advances in n, then a new p = N + 1 entry
        new_last = terms[-1] * fam.ratio_p(0, N)
        terms = np.append(terms * fam.ratio_n(n, p), new_last)
        n = np.append(n + 1, 0)
        p = np.append(p, N + 1)
    raise ConvergenceError(f"double series did not converge within {policy.max_terms} diagonals")


def _sum_rows(fam: _Family, policy: SeriesPolicy, outer: str) -> _DoubleSum:
    """Row-by-row summation with the chosen index outermost (scalar loops)."""
    tol, window = policy.rel_tol, policy.stagnation_window
    rows = []
    abs_sum = 0.0
    quiet = 0
    last_big = 0
    head = 1.0 + 0j
    for i in range(policy.max_terms):
        t = head
        row = [t]
        inner_quiet = 0
        for j in range(policy.max_terms):
            if outer == "n_outer":
                t = t * fam.ratio_p(i, j)
            else:
                t = t * fam.ratio_n(j, i)
            row.append(t)
            if abs(t) <= 1e-3 * _EPS * abs(csum(row)):
                inner_quiet += 1
                if inner_quiet >= window:
                    break
            else:
                inner_quiet = 0
        else:
            raise ConvergenceError("inner row did not converge")
        rs = csum(row)
        mag = float(np.sum(np.abs(row)))
        rows.append(rs)
        abs_sum += mag
        if mag <= tol * abs(csum(rows)):
            quiet += 1
            if quiet >= window:
                return _DoubleSum(np.array([csum(rows)]), abs_sum, mag, last_big + 1, np.array(rows))
        else:
            quiet = 0
            last_big = i
        head = head * (fam.ratio_n(i, 0) if outer == "n_outer" else fam.ratio_p(0, i))
    raise ConvergenceError("outer summation did not converge")


def _run(fam: _Family, policy: SeriesPolicy, order: Order) -> _DoubleSum:
    if order == "diagonal":
        return _sum_diagonal(fam, policy)
    if order in ("n_outer", "p_outer"):
        return _sum_rows(fam, policy, order)
    raise ValueError(f"unknown summation order {order!r}")


def _report(res: _DoubleSum, method: str, policy: SeriesPolicy, k: int = 0) -> MethodReport:
    value = complex(res.sums[k])
    est = res.tail + _EPS * res.abs_sum
    return MethodReport(
        value=value,
        method=method,
        terms_used=res.count,
        est_error=est,
        converged=est <= policy.rel_tol * abs(value),
        terms=res.diag_sums,
    )


def _check_alpha(alpha: float) -> None:
    if alpha == math.floor(alpha):
        raise DomainError("alpha must not be an integer (negative-subscript Pochhammer poles)")


# --------------------------------------------------------------------------
# public series
# --------------------------------------------------------------------------

def horn_h3(alpha: float, x: float, y: complex, policy: SeriesPolicy = DEFAULT_POLICY,
            order: Order = "diagonal") -> MethodReport:
    """Horn H3(alpha, alpha, 2 alpha; x, y) for 0 <= x < 1.

    Parameters
    ----------
    alpha : float
        Non-integer parameter (m + 1/2 in use).
    x : float
        First variable, 0 <= x < 1.
    y : complex
        Second variable; the series is entire in y.
    policy : SeriesPolicy
    order : {"diagonal", "n_outer", "p_outer"}
        Summation order.  The default sums anti-diagonals.
    """
    _check_alpha(alpha)
    if not 0 <= x < 1:
        raise DomainError("H3 series needs 0 <= x < 1")
    return _report(_run(_h3_family(alpha, x, complex(y)), policy, order), "horn_h3", policy)


def kdf(alpha: float, u: complex, v: complex, policy: SeriesPolicy = DEFAULT_POLICY,
        order: Order = "diagonal") -> MethodReport:
    """Kampe de Feriet series sum (a)_n u^n v^p / ((a+1)_{n+p} (2a)_n n! p!), a = alpha."""
    return _report(_run(_kdf_family(alpha, complex(u), complex(v)), policy, order), "kdf", policy)


def _g_plus_prefactor(m: int, x: float) -> float:
    a = m + 0.5
    return math.exp(sc.gammaln(a) - sc.gammaln(m + 1.0) - 0.5 * math.log(math.pi)
                    + a * math.log(x) - (2 * m + 1) * math.log(2.0))


def _g_minus_prefactor(m: int, root_xy: complex) -> complex:
    return 1j * root_xy ** (2 * m + 1) / math.factorial(2 * m + 1)


def g_plus(m: int, x: float, y: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Dimensionless even part g_+ = Gamma(m+1/2)/(2^(2m+1) m! sqrt(pi)) x^(m+1/2) H3."""
    rep = horn_h3(m + 0.5, x, y, policy)
    return rep.scaled(_g_plus_prefactor(m, x), "g_plus")


def g_minus(m: int, x: float, y: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Dimensionless odd part g_- = i (x y)^(m+1/2) / (2m+1)! F(x y, -y).

    (x y)^(1/2) is taken as sqrt(x) * sqrt(y) with the principal root of y,
    which matches gamma k / 2 for Re(beta), Im(beta) >= 0.
    """
    y = complex(y)
    if y == 0:
        return MethodReport(0j, "g_minus", 0, 0.0, True)
    rep = kdf(m + 0.5, x * y, -y, policy)
    return rep.scaled(_g_minus_prefactor(m, math.sqrt(x) * np.sqrt(y)), "g_minus")


def lambda_plus_closed(d: Dimensionless, rR: float | None = None,
                       policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Even part Lambda_+ from the H3 closed form."""
    rR = d.rR if rR is None else rR
    rep = horn_h3(d.alpha, d.x, d.y, policy)
    out = rep.scaled(_g_plus_prefactor(d.m, d.x) / math.sqrt(rR), "closed_plus")
    out.plus = out.value
    return out


def lambda_minus_closed(d: Dimensionless, rR: float | None = None,
                        policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Odd part Lambda_- from the Kampe de Feriet closed form; exactly 0 at gamma = 0."""
    rR = d.rR if rR is None else rR
    if d.gamma == 0:
        return MethodReport(0j, "closed_minus", 0, 0.0, True, minus=0j)
    rep = kdf(d.alpha, d.y * d.x, -d.y, policy)
    out = rep.scaled(_g_minus_prefactor(d.m, d.gamma * d.k / 2.0) / math.sqrt(rR), "closed_minus")
    out.minus = out.value
    return out


def closed_form(d: Dimensionless, policy: SeriesPolicy = DEFAULT_POLICY) -> MethodReport:
    """Full coefficient Lambda_+ + Lambda_- from the two closed forms."""
    lp = lambda_plus_closed(d, policy=policy)
    lm = lambda_minus_closed(d, policy=policy)
    return MethodReport(
        value=lp.value + lm.value,
        method="closed",
        terms_used=max(lp.terms_used, lm.terms_used),
        est_error=lp.est_error + lm.est_error,
        converged=lp.est_error + lm.est_error <= policy.rel_tol * abs(lp.value + lm.value),
        plus=lp.value,
        minus=lm.value,
    )
