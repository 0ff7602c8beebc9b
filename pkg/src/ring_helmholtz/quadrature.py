"""
Integral representations of the coefficient, used as ground-truth oracles.

* ``quad_angular``: the defining azimuthal integral

      G = (1/pi) int_0^pi exp(i beta d) / d cos(m psi) dpsi,
      d^2 = (r-R)^2 + (z-Z)^2 + 4 r R sin^2(psi/2).

  Writing d^2 this way keeps full accuracy when the field point is close to
  the ring.  The partition is graded geometrically toward psi = 0 on the
  scale sqrt(2 (omega-1)) and split at the nodes of cos(m psi) and at the
  oscillation period of exp(i beta d).

  Far from the ring the result is a tiny fraction of the integrand, so for
  m >= 1 the cosine is also moved onto the kernel by m integrations by parts
  (the Rodrigues form of the Chebyshev coefficient),

      int_0^pi cos(m psi) g(cos psi) dpsi
          = sqrt(pi) / (2^m Gamma(m+1/2)) int_0^pi g^(m)(cos psi) sin^(2m) psi dpsi,

  where g(u) = exp(i beta sqrt(w)) / sqrt(w), w = A - B u.  The form with
  the smaller cancellation ratio int|f| / |int f| is returned.

* ``quad_spectral``: the Bessel-transform form (real beta only)

      G = i int_0^inf exp(i |z-Z| sqrt(beta^2-s^2)) J_m(s r) J_m(s R) s ds / sqrt(beta^2-s^2),

  with s = beta sin t below the branch point and s = beta cosh u above it,
  which removes the inverse square-root singularity at s = beta.  The upper
  range is cut where |z-Z| sqrt(s^2-beta^2) > 40.

* ``quad_evanescent``: for imaginary lambda = i sigma,

      yhat = sqrt(pi) int_0^inf exp(-omega s - sigma^2/(4s)) I_m(s) s^(-1/2) ds,

  evaluated as exp(-(omega-1) s) * (exp(-s) I_m(s)) with s = t^2, and
  converted to the coefficient by G = yhat / (pi sqrt(2 r R)).
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sc

from ._gk import adaptive_gk
from .errors import DomainError
from .hyper2d import MethodReport
from .params import RingConfig, derive

MAX_ANGULAR_MODE = 64
_DECAY_CUT = 40.0


def _report(res, method: str, scale: complex = 1.0) -> MethodReport:
    return MethodReport(
        value=res.value * scale,
        method=method,
        terms_used=res.n_eval,
        est_error=res.error * abs(scale),
        converged=res.converged,
    )


def quad_angular(config: RingConfig, abs_tol: float = 1e-13, rel_tol: float = 1e-12) -> MethodReport:
    """Coefficient from the defining angular integral.

    Parameters
    ----------
    config : RingConfig
        Off-ring configuration with m <= 64; complex beta allowed.
    abs_tol, rel_tol : float
        Tolerances passed to the adaptive Gauss-Kronrod driver.

    Returns
    -------
    MethodReport
        ``terms_used`` is the number of integrand evaluations.
    """
    d = derive(config)
    m = config.m
    if m > MAX_ANGULAR_MODE:
        raise DomainError(f"angular quadrature supports m <= {MAX_ANGULAR_MODE}")
    beta = config.beta
    c0 = (config.r - config.R) ** 2 + (config.z - config.Z) ** 2
    c1 = 4.0 * config.r * config.R

    def f(psi):
        dist = np.sqrt(c0 + c1 * np.sin(0.5 * psi) ** 2)
        return np.exp(1j * beta * dist) / dist * np.cos(m * psi)

    pts = [0.0, math.pi]
    h = math.sqrt(2.0 * d.omega_m1)
    pts += [h * 2.0 ** j for j in range(-3, 80) if h * 2.0 ** j < math.pi]
    if m > 0:
        pts += [(j + 0.5) * math.pi / m for j in range(m)]
    d_span = math.sqrt(c0 + c1) - math.sqrt(c0)
    n_osc = int(abs(beta) * d_span / math.pi) + 1
    pts += list(np.linspace(0.0, math.pi, min(n_osc, 4000) + 1))
    pts = sorted(pts)
    res = adaptive_gk(f, pts, abs_tol=abs_tol * math.pi, rel_tol=rel_tol)
    if m == 0 or d.omega < _RODRIGUES_MIN_OMEGA or res.value == 0:
        return _report(res, "angular", 1.0 / math.pi)

    g = _rodrigues_integrand(m, beta, c0, c1)
    ratio_direct = _cancellation_ratio(f, pts, res.value)
    if ratio_direct < _RODRIGUES_MIN_RATIO:
        return _report(res, "angular", 1.0 / math.pi)
    scale = math.exp(0.5 * math.log(math.pi) - m * math.log(2.0) - sc.gammaln(m + 0.5))
    res_r = adaptive_gk(g, pts, abs_tol=abs_tol * math.pi / scale, rel_tol=rel_tol)
    ratio_r = _cancellation_ratio(g, pts, res_r.value)
    if ratio_r < ratio_direct:
        res_r = type(res_r)(res_r.value, res_r.error, res_r.n_eval + res.n_eval, res_r.converged)
        return _report(res_r, "angular", scale / math.pi)
    return _report(res, "angular", 1.0 / math.pi)


_RODRIGUES_MIN_OMEGA = 1.2
_RODRIGUES_MIN_RATIO = 1e3


def _cancellation_ratio(f, pts, value: complex) -> float:
    """int |f| / |int f|, the factor by which rounding in f is amplified."""
    mag = adaptive_gk(lambda t: np.abs(f(t)), pts, abs_tol=0.0, rel_tol=1e-3, max_intervals=200)
    return mag.value.real / abs(value) if value != 0 else math.inf


def _rodrigues_integrand(m: int, beta: complex, c0: float, c1: float):
    """g^(m)(cos psi) sin^(2m)(psi) for g(u) = exp(i beta sqrt(w)) / sqrt(w), w = A - B u.

    d^n/dw^n [exp(i beta d) d^-k] with d = sqrt(w) follows from
    d/dw = (1/2d) d/dd: the coefficient of d^-k feeds (i beta/2) into
    d^-(k+1) and (-k/2) into d^-(k+2).  With the (-B)^m from the chain rule
    every term is written through x = B sin^2(psi) / w <= 2.
    """
    coef = {1: 1.0 + 0j}
    for _ in range(m):
        nxt: dict[int, complex] = {}
        for k, c in coef.items():
            nxt[k + 1] = nxt.get(k + 1, 0) + 0.5j * beta * c
            nxt[k + 2] = nxt.get(k + 2, 0) - 0.5 * k * c
        coef = nxt
    sign = (-1) ** m
    half_b = 0.5 * c1
    # (-B)^m sin^2m / d^k = (-1)^m x^m d^(2m-k)
    powers = sorted(coef)
    cvec = np.array([sign * coef[k] for k in powers])
    expo = np.array([2 * m - k for k in powers], dtype=float)

    def g(psi):
        psi = np.asarray(psi, dtype=float)
        w = c0 + c1 * np.sin(0.5 * psi) ** 2
        dist = np.sqrt(w)
        x = half_b * np.sin(psi) ** 2 / w
        poly = sum(c * dist ** e for c, e in zip(cvec, expo))
        return np.exp(1j * beta * dist) * x ** m * poly

    return g


def quad_spectral(config: RingConfig, abs_tol: float = 1e-13, rel_tol: float = 1e-12) -> MethodReport:
    """Coefficient from the spectral Bessel-product integral (real beta).

    Raises
    ------
    DomainError
        If z == Z (no exponential decay) or beta is not real and non-negative.
    """
    derive(config)
    beta = config.beta
    if beta.imag != 0 or beta.real < 0:
        raise DomainError("spectral quadrature is implemented for real beta >= 0")
    b = beta.real
    h = abs(config.z - config.Z)
    if h == 0:
        raise DomainError("spectral quadrature needs z != Z")
    m, r, R = config.m, config.r, config.R
    span = r + R
    total = 0j
    err = 0.0
    n_eval = 0
    ok = True
    if b > 0:
        def below(t):
            st = np.sin(t)
            return 1j * np.exp(1j * h * b * np.cos(t)) * sc.jv(m, r * b * st) * sc.jv(m, R * b * st) * b * st

        n_osc = int((h + span) * b / math.pi) + 1
        res = adaptive_gk(below, np.linspace(0.0, 0.5 * math.pi, min(n_osc, 4000) + 1),
                          abs_tol=0.5 * abs_tol, rel_tol=rel_tol)
        total += res.value
        err += res.error
        n_eval += res.n_eval
        ok &= res.converged

        u_max = math.asinh(_DECAY_CUT / (h * b))

        def above(u):
            s = b * np.cosh(u)
            return np.exp(-h * b * np.sinh(u)) * sc.jv(m, r * s) * sc.jv(m, R * s) * s

        s_max = b * math.cosh(u_max)
        n_osc = int(span * s_max / math.pi) + 1
        s_grid = np.linspace(b, s_max, min(n_osc, 4000) + 1)
        u_grid = np.arccosh(np.clip(s_grid / b, 1.0, None))
        u_grid[-1] = u_max
        res = adaptive_gk(above, u_grid, abs_tol=0.5 * abs_tol, rel_tol=rel_tol)
    else:
        s_max = _DECAY_CUT / h

        def static(s):
            return np.exp(-h * s) * sc.jv(m, r * s) * sc.jv(m, R * s)

        n_osc = int(span * s_max / math.pi) + 1
        res = adaptive_gk(static, np.linspace(0.0, s_max, min(n_osc, 4000) + 1),
                          abs_tol=abs_tol, rel_tol=rel_tol)
    total += res.value
    err += res.error
    n_eval += res.n_eval
    ok &= res.converged
    return MethodReport(total, "spectral", n_eval, err, bool(ok))


def quad_evanescent(sigma: float, omega: float, m: int, omega_m1: float | None = None,
                    abs_tol: float = 1e-14, rel_tol: float = 1e-12) -> MethodReport:
    """yhat_m(i sigma, omega) from the non-oscillatory evanescent integral.

    Parameters
    ----------
    sigma : float
        Imaginary part of lambda, >= 0.
    omega : float
        Toroidal variable, > 1.
    m : int
        Mode.
    omega_m1 : float, optional
        omega - 1 without cancellation.

    Returns
    -------
    MethodReport
        Value of yhat (real).  Use :func:`evanescent_coefficient` for G.
    """
    wm1 = (omega - 1.0) if omega_m1 is None else float(omega_m1)
    if not wm1 > 0:
        raise DomainError("evanescent integral needs omega > 1")
    if sigma < 0:
        raise DomainError("sigma must be >= 0")
    q = 0.25 * sigma * sigma

    def f(t):
        s = t * t
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            g = np.exp(-wm1 * s - np.where(s > 0, q / s, np.inf if q > 0 else 0.0)) * sc.ive(m, s)
        return np.where(s > 0, g, 1.0 if (q == 0 and m == 0) else 0.0)

    t_max = math.sqrt(_DECAY_CUT / wm1)
    t_lo = min(1e-3, 1e-3 * t_max)
    pts = [0.0] + list(np.geomspace(t_lo, t_max, 60))
    if sigma > 0:
        pts += [math.sqrt(sigma) * f for f in (0.25, 0.5, 1.0, 2.0) if math.sqrt(sigma) * f < t_max]
    res = adaptive_gk(f, sorted(pts), abs_tol=abs_tol, rel_tol=rel_tol)
    return _report(res, "evanescent", 2.0 * math.sqrt(math.pi))


def evanescent_coefficient(config: RingConfig, abs_tol: float = 1e-14,
                           rel_tol: float = 1e-12) -> MethodReport:
    """Coefficient for purely imaginary beta via :func:`quad_evanescent`."""
    d = derive(config)
    if config.beta.real != 0:
        raise DomainError("evanescent integral needs purely imaginary beta")
    root = math.sqrt(2.0 * d.rR)
    sigma = config.beta.imag * root
    rep = quad_evanescent(sigma, d.omega, config.m, d.omega_m1, abs_tol, rel_tol)
    out = rep.scaled(1.0 / (math.pi * root), "evanescent")
    return out
