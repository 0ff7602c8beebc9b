"""
Single entry point for the coefficient G^m(beta, r, R, z - Z) by any method.

Methods
-------
closed       Horn H3 + Kampe de Feriet closed forms
hankel       Hankel-function series (far field)
bessel_jy    separate Bessel Y and J series
legendre     toroidal-harmonic series (near field)
p_series     unified associated-Legendre P series
angular      defining angular integral
spectral     Bessel-product spectral integral (real beta, z != Z)
evanescent   non-oscillatory integral (purely imaginary beta)

``auto`` uses the Legendre series for omega < 2 and the Hankel series
otherwise, falling back to the angular integral when the series does not
converge.  A fallback is recorded in the method string, never hidden.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import ConvergenceError, DomainError
from .hyper2d import DEFAULT_POLICY, MethodReport, SeriesPolicy, closed_form
from .params import Dimensionless, RingConfig, derive
from .quadrature import MAX_ANGULAR_MODE, evanescent_coefficient, quad_angular, quad_spectral
from .series import (eval_bessel_jy, eval_hankel_series, eval_legendre_series,
                     eval_p_series)
from .specfun import toroidal_q0

SERIES_METHODS = ("closed", "hankel", "bessel_jy", "legendre", "p_series")
QUADRATURE_METHODS = ("angular", "spectral", "evanescent")
METHODS = SERIES_METHODS + QUADRATURE_METHODS

_SERIES: dict[str, Callable[[Dimensionless, SeriesPolicy], MethodReport]] = {
    "closed": lambda d, pol: closed_form(d, pol),
    "hankel": lambda d, pol: eval_hankel_series(d, policy=pol),
    "bessel_jy": lambda d, pol: eval_bessel_jy(d, policy=pol),
    "legendre": lambda d, pol: eval_legendre_series(d, policy=pol),
    "p_series": lambda d, pol: eval_p_series(d, policy=pol),
}


def static_coefficient(m: int, omega: float, rR: float, omega_m1: float | None = None) -> float:
    """beta = 0 value Q_{m-1/2}(omega) / (pi sqrt(r R))."""
    return toroidal_q0(m, omega, omega_m1) / (math.pi * math.sqrt(rR))


def applicable_methods(config: RingConfig) -> list[str]:
    """Methods whose preconditions hold for this configuration (in canonical order)."""
    d = derive(config)
    beta = config.beta
    out = ["closed"]
    if d.gamma != 0:
        out += ["hankel", "bessel_jy"]
    out += ["legendre", "p_series"]
    if config.m <= MAX_ANGULAR_MODE:
        out.append("angular")
    if beta.imag == 0 and beta.real >= 0 and config.z != config.Z:
        out.append("spectral")
    if beta.real == 0:
        out.append("evanescent")
    return out


def compute_coefficient(config: RingConfig, method: str = "auto",
                        policy: SeriesPolicy | None = None,
                        abs_tol: float = 1e-13) -> MethodReport:
    """Coefficient G^m by the chosen method.

    Parameters
    ----------
    config : RingConfig
    method : str
        One of :data:`METHODS` or ``"auto"``.
    policy : SeriesPolicy, optional
        Series truncation policy; defaults to ``SeriesPolicy.from_env()``.
    abs_tol : float
        Absolute tolerance for the quadrature methods.

    Raises
    ------
    DomainError, OnRingError
        Invalid or on-ring geometry, or a method outside its domain.
    ConvergenceError
        Series overflow or non-convergence (explicit methods only).
    """
    policy = SeriesPolicy.from_env() if policy is None else policy
    d = derive(config)
    if method == "auto":
        return _auto(config, d, policy, abs_tol)
    if method in _SERIES:
        return _SERIES[method](d, policy)
    if method == "angular":
        return quad_angular(config, abs_tol)
    if method == "spectral":
        return quad_spectral(config, abs_tol)
    if method == "evanescent":
        return evanescent_coefficient(config, abs_tol)
    raise DomainError(f"unknown method {method!r}; choose from {', '.join(METHODS)} or auto")


def _auto(config: RingConfig, d: Dimensionless, policy: SeriesPolicy, abs_tol: float) -> MethodReport:
    primary = "legendre" if (d.omega < 2.0 or d.gamma == 0) else "hankel"
    try:
        rep = _SERIES[primary](d, policy)
        if rep.converged:
            return rep
        reason = "not converged"
    except ConvergenceError as exc:
        reason = str(exc)
    if config.m > MAX_ANGULAR_MODE:
        raise ConvergenceError(f"{primary} series failed ({reason}) and m is too large for quadrature")
    rep = quad_angular(config, abs_tol)
    rep.method = f"angular(fallback from {primary})"
    return rep


def compute_all(config: RingConfig, policy: SeriesPolicy | None = None,
                abs_tol: float = 1e-13) -> dict[str, MethodReport | Exception]:
    """Every applicable method; failures are returned as the raised exception."""
    out: dict[str, MethodReport | Exception] = {}
    for name in applicable_methods(config):
        try:
            out[name] = compute_coefficient(config, name, policy, abs_tol)
        except (ConvergenceError, DomainError) as exc:
            out[name] = exc
    return out


def max_spread(reports: dict[str, MethodReport | Exception]) -> float:
    """Largest pairwise |difference| / max |value| among successful reports."""
    vals = [r.value for r in reports.values() if isinstance(r, MethodReport)]
    if len(vals) < 2:
        return 0.0
    scale = max(abs(v) for v in vals)
    spread = max(abs(a - b) for i, a in enumerate(vals) for b in vals[i + 1:])
    return spread / scale if scale > 0 else spread
