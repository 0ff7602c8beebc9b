"""
Residual checks of the coefficient against the differential equations it
satisfies.

Fourth-order equation in x = k^2, with derivatives taken along fixed
chi = x y / 2 (i.e. fixed lambda), satisfied by both g_+ and g_-::

    (1-x) x^4 g'''' + (6-9x) x^3 g''' + [6 - a(a-1) - 18x + y(2-x)] x^2 g''
        - 2 [a(a-1) + x(y+3)] x g' + y^2 g = 0,          a = m + 1/2.

Fourth-order equation in omega at fixed lambda, satisfied by
yhat = pi sqrt(2 r R) G::

    (1-omega^2) yhat'''' - 6 omega yhat''' + (m^2 - lambda^2 omega/2 - 25/4) yhat''
        - lambda^2 yhat' - (lambda^2/4)^2 yhat = 0.

With x = 2/(omega+1) the omega operator equals -(x^2/4) times the x operator.

Also provided: the static Legendre equation of degree m - 1/2, the two
second-order PDE pairs of the Horn H3 and Kampe de Feriet series, and
term-wise analytic derivatives of every series involved.  All residuals are
|sum of terms| / sum |terms|, with 0/0 taken as 0.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy import special as sc

from .errors import ConvergenceError, DomainError
from .hyper2d import (DEFAULT_POLICY, SeriesPolicy, _g_minus_prefactor, _g_plus_prefactor,
                      _h3_family, _kdf_family, _sum_diagonal)
from .specfun import csum, toroidal_q_ladder

_EPS = np.finfo(float).eps


def relative_residual(terms: Sequence[complex]) -> float:
    """|sum(terms)| / sum(|terms|); 0 when every term vanishes."""
    t = np.asarray(terms, dtype=complex)
    scale = float(np.sum(np.abs(t)))
    if scale == 0.0:
        return 0.0
    return abs(csum(t)) / scale


# --------------------------------------------------------------------------
# ODE coefficients and residuals
# --------------------------------------------------------------------------

def ode_coefficients_x(m: int, x: float, y: complex) -> np.ndarray:
    """Coefficients [c0, c1, c2, c3, c4] of the x-equation (c_j multiplies g^(j))."""
    a = m + 0.5
    aa = a * (a - 1.0)
    return np.array([
        y * y,
        -2.0 * (aa + x * (y + 3.0)) * x,
        (6.0 - aa - 18.0 * x + y * (2.0 - x)) * x * x,
        (6.0 - 9.0 * x) * x ** 3,
        (1.0 - x) * x ** 4,
    ], dtype=complex)


def ode_residual_x(m: int, y_param: complex, x: float, derivs: Sequence[complex],
                   coefficients: Sequence[complex] | None = None) -> float:
    """Relative residual of the x-equation.

    Parameters
    ----------
    m : int
        Mode.
    y_param : complex
        y = gamma^2/4 at the evaluation point.
    x : float
        k^2, in (0, 1).
    derivs : sequence of 5 complex
        [g, g', g'', g''', g''''], derivatives along fixed x y.
    coefficients : sequence of 5 complex, optional
        Override of the coefficient vector (for sentinel tests).
    """
    c = ode_coefficients_x(m, x, complex(y_param)) if coefficients is None else np.asarray(coefficients)
    return relative_residual(c * np.asarray(derivs, dtype=complex))


def ode_coefficients_omega(m: int, lam: complex, omega: float) -> np.ndarray:
    """Coefficients [A0..A4] of the omega-equation (A_j multiplies yhat^(j))."""
    l2 = complex(lam) ** 2
    return np.array([
        -(l2 / 4.0) ** 2,
        -l2,
        m * m - l2 * omega / 2.0 - 6.25,
        -6.0 * omega,
        1.0 - omega * omega,
    ], dtype=complex)


def ode_residual_omega(m: int, lam: complex, omega: float, derivs: Sequence[complex],
                       coefficients: Sequence[complex] | None = None) -> float:
    """Relative residual of the omega-equation; derivs are d^j yhat / d omega^j at fixed lambda."""
    c = ode_coefficients_omega(m, lam, omega) if coefficients is None else np.asarray(coefficients)
    return relative_residual(c * np.asarray(derivs, dtype=complex))


def omega_operator_in_x(m: int, lam: complex, x: float) -> np.ndarray:
    """Omega-equation rewritten on f(x) = yhat(omega(x)), omega = (2-x)/x.

    Returns B with sum_j A_j d^j/domega^j = sum_j B_j d^j/dx^j, using
    x' = -x^2/2, x'' = x^3/2, x''' = -3x^4/4, x'''' = 3x^5/2 and Faa di Bruno.
    """
    omega = (2.0 - x) / x
    A = ode_coefficients_omega(m, lam, omega)
    d1, d2, d3, d4 = -x * x / 2.0, x ** 3 / 2.0, -0.75 * x ** 4, 1.5 * x ** 5
    # rows: d^j/domega^j, columns: coefficient of f^(k)
    chain = np.zeros((5, 5))
    chain[0, 0] = 1.0
    chain[1, 1] = d1
    chain[2, 1], chain[2, 2] = d2, d1 ** 2
    chain[3, 1], chain[3, 2], chain[3, 3] = d3, 3.0 * d1 * d2, d1 ** 3
    chain[4, 1] = d4
    chain[4, 2] = 4.0 * d1 * d3 + 3.0 * d2 ** 2
    chain[4, 3] = 6.0 * d1 ** 2 * d2
    chain[4, 4] = d1 ** 4
    return A @ chain


def legendre_residual(m: int, omega: float, q: float, q1: float, q2: float) -> float:
    """Relative residual of (1-w^2) q'' - 2 w q' + (m^2 - 1/4) q = 0."""
    return relative_residual([(1.0 - omega * omega) * q2, -2.0 * omega * q1, (m * m - 0.25) * q])


# --------------------------------------------------------------------------
# PDE systems of the double series
# --------------------------------------------------------------------------

def pde_residual_h3(alpha: float, x: float, y: complex, partials: Sequence[complex]) -> tuple[float, float]:
    """Residuals of the H3(a, a, 2a) system.

    partials = [F, F_x, F_y, F_xx, F_xy, F_yy].  Equations::

        x(1-x) F_xx + x y F_xy + [2a - (2a+1) x] F_x + a y F_y - a^2 F = 0
        y F_yy - x F_xy + (1-a) F_y + F = 0
    """
    z, p, q, r, s, t = (complex(v) for v in partials)
    a = alpha
    e1 = [x * (1 - x) * r, x * y * s, (2 * a - (2 * a + 1) * x) * p, a * y * q, -a * a * z]
    e2 = [y * t, -x * s, (1 - a) * q, z]
    return relative_residual(e1), relative_residual(e2)


def pde_residual_kdf(alpha: float, u: complex, v: complex, partials: Sequence[complex]) -> tuple[float, float]:
    """Residuals of the Kampe de Feriet system.

    partials = [F, F_u, F_v, F_uu, F_uv, F_vv].  Equations::

        F = v F_vv + u F_uv + (a+1) F_v
        F = 2a F_u + u F_uu + F_v + v F_vv
    """
    z, p, q, r, s, t = (complex(v_) for v_ in partials)
    a = alpha
    e1 = [z, -v * t, -u * s, -(a + 1) * q]
    e2 = [z, -2 * a * p, -u * r, -q, -v * t]
    return relative_residual(e1), relative_residual(e2)


def _falling(a, j: int):
    out = np.ones_like(np.asarray(a, dtype=float))
    for i in range(j):
        out = out * (a - i)
    return out


_PARTIAL_ORDERS = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def _double_partials(fam, x: complex, y: complex, policy: SeriesPolicy) -> np.ndarray:
    def weights(n, p):
        return np.array([_falling(n, i) * _falling(p, j) / (x ** i * y ** j) for i, j in _PARTIAL_ORDERS])

    return _sum_diagonal(fam, policy, weights).sums


def h3_partials(alpha: float, x: float, y: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> np.ndarray:
    """[F, F_x, F_y, F_xx, F_xy, F_yy] of H3(a, a, 2a; x, y) by term-wise differentiation (x, y != 0)."""
    if x == 0 or y == 0:
        raise DomainError("term-wise partials need x, y != 0")
    return _double_partials(_h3_family(alpha, x, complex(y)), x, complex(y), policy)


def kdf_partials(alpha: float, u: complex, v: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> np.ndarray:
    """[F, F_u, F_v, F_uu, F_uv, F_vv] of the Kampe de Feriet series (u, v != 0)."""
    if u == 0 or v == 0:
        raise DomainError("term-wise partials need u, v != 0")
    return _double_partials(_kdf_family(alpha, complex(u), complex(v)), complex(u), complex(v), policy)


# --------------------------------------------------------------------------
# derivatives along fixed chi of the dimensionless coefficients
# --------------------------------------------------------------------------

def g_plus_derivs(m: int, x: float, y: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> np.ndarray:
    """[g_+, d/dx, ..., d^4/dx^4] at fixed x y.

    Each term is C t(n,p) (2 chi)^p x^(a+n-p); its j-th derivative carries
    the falling factorial (a+n-p)_j / x^j.
    """
    a = m + 0.5
    y = complex(y)

    def weights(n, p):
        e = a + n - p
        return np.array([_falling(e, j) / x ** j for j in range(5)])

    sums = _sum_diagonal(_h3_family(a, x, y), policy, weights).sums
    return sums * _g_plus_prefactor(m, x)


def g_minus_derivs(m: int, x: float, y: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> np.ndarray:
    """[g_-, d/dx, ..., d^4/dx^4] at fixed x y.

    With u = x y fixed and v = -y = -2 chi / x each term goes as x^(-p).
    """
    y = complex(y)
    if y == 0:
        return np.zeros(5, dtype=complex)
    a = m + 0.5

    def weights(n, p):
        return np.array([_falling(-p, j) / x ** j for j in range(5)])

    sums = _sum_diagonal(_kdf_family(a, x * y, -y), policy, weights).sums
    return sums * _g_minus_prefactor(m, math.sqrt(x) * np.sqrt(y))


def yhat_omega_derivs(m: int, lam: complex, omega: float, omega_m1: float | None = None,
                      rel_tol: float = 1e-15, max_terms: int = 4000) -> np.ndarray:
    """[yhat, d/domega, ..., d^4/domega^4] at fixed lambda from the Legendre series.

    yhat = pi sqrt(2) [(-1)^m sum_p c_p b_p + i (lambda/2)^(2m+1) sum_p e_p b_{p+m+1/2}]
    with the scaled toroidal ladder b_mu and d b_mu / d omega = (mu - m - 1/2) b_{mu-1}.
    Negative integer orders use b_{-q} = b_q / s^(2q).
    """
    wm1 = omega - 1.0 if omega_m1 is None else float(omega_m1)
    if not wm1 > 0:
        raise DomainError("omega must exceed 1")
    s2 = wm1 * (omega + 1.0)
    lam = complex(lam)
    q = -lam * lam / 4.0
    n = 32
    while n <= max_terms:
        b = toroidal_q_ladder(m, n + 1, omega, wm1)
        bh = toroidal_q_ladder(m, m + n + 1, omega, wm1, half=True)
        c = np.empty(n, dtype=complex)
        e = np.empty(n, dtype=complex)
        c[0] = sc.rgamma(0.5 - m)
        e[0] = sc.rgamma(m + 1.5)
        for p in range(n - 1):
            c[p + 1] = c[p] * q / ((p + 1) * (p - m + 0.5))
            e[p + 1] = e[p] * q / ((p + 1) * (p + m + 1.5))
        pidx = np.arange(n)
        rows_plus = []
        rows_minus = []
        for j in range(5):
            idx = pidx - j
            bj = np.where(idx >= 0, b[np.abs(idx)], b[np.abs(idx)] / s2 ** np.abs(idx))
            fac = _falling(pidx - m - 0.5, j)
            rows_plus.append(c * fac * bj)
            hidx = np.clip(pidx + m - j, 0, None)
            rows_minus.append(e * _falling(pidx, j) * bh[hidx])
        tp = (-1) ** m * np.array(rows_plus)
        tm = 1j * (lam / 2.0) ** (2 * m + 1) * np.array(rows_minus)
        terms = tp + tm
        if not np.all(np.isfinite(terms)):
            raise ConvergenceError("omega-derivative series overflowed")
        tail = np.max(np.abs(terms[:, -8:]), axis=1)
        total = np.array([csum(row) for row in terms])
        if np.all(tail <= rel_tol * np.maximum(np.abs(total), _EPS * np.abs(terms).sum(axis=1))):
            return math.pi * math.sqrt(2.0) * total
        n *= 2
    raise ConvergenceError("omega-derivative series did not converge")
