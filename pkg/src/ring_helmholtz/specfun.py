"""
Special functions used by the coefficient series and their oracles.

Contents
--------
* gamma / reciprocal gamma / Pochhammer symbols, with pole signalling.
* Half-integer order Bessel functions J, Y, H1 and I by three-term
  recurrence.  Ladders are returned as (mantissa, log-scale) pairs so that
  orders in the hundreds neither overflow nor underflow.
* Gauss 2F1 with logarithmic connection formulas near z = 1, and 1F2.
* Toroidal harmonics Q^mu_{m-1/2}(omega) through the scaled order ladder

      b_mu = (omega^2 - 1)^(mu/2) * QQ^mu_{m-1/2}(omega),

  where QQ^mu = exp(-i mu pi) Q^mu / Gamma(nu + mu + 1) is the real-valued
  normalised function.  The ladder stays finite as omega -> 1 for mu > 0,
  which is what makes the near-ring series usable.
* Associated Legendre P^m_nu(xi), xi > 1, for integer and half-integer nu,
  and Whipple's P <-> Q transformation.

All functions are pure.
"""

from __future__ import annotations

import cmath
import math
from typing import Literal

import numpy as np
from scipy import special as sc

from .errors import ConvergenceError, DomainError, GammaPoleError

_LOG_BIG = 575.0  # rescale recurrences once |value| exceeds exp(_LOG_BIG)
_BIG = math.exp(_LOG_BIG)
_EPS = np.finfo(float).eps


# --------------------------------------------------------------------------
# summation helpers
# --------------------------------------------------------------------------

def csum(values) -> complex:
    """Correctly rounded sum of a complex sequence (fsum on each part)."""
    arr = np.asarray(values, dtype=complex).ravel()
    return complex(math.fsum(arr.real), math.fsum(arr.imag))


# --------------------------------------------------------------------------
# gamma machinery
# --------------------------------------------------------------------------

def _is_pole(x) -> bool:
    return np.isreal(x) and float(np.real(x)) <= 0 and float(np.real(x)) == math.floor(np.real(x))


def gamma(x):
    """Gamma function for real or complex argument.

    Raises
    ------
    GammaPoleError
        At non-positive integers.  Callers that need 1/Gamma should use
        :func:`rgamma`, which is exactly zero there.
    """
    if _is_pole(x):
        raise GammaPoleError(f"gamma has a pole at {x}")
    if isinstance(x, complex) and x.imag != 0:
        return complex(sc.gamma(x))
    return float(sc.gamma(float(np.real(x))))


def rgamma(x):
    """Reciprocal gamma, entire; exactly 0 at the poles of gamma."""
    if isinstance(x, complex) and x.imag != 0:
        return complex(sc.rgamma(x))
    return float(sc.rgamma(float(np.real(x))))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = Gamma(a + n) / Gamma(a).

    Negative ``n`` uses (a)_{-k} = 1 / (a - k)_k.

    Raises
    ------
    GammaPoleError
        If the negative-subscript identity divides by zero.
    """
    n = int(n)
    if n >= 0:
        out = 1.0
        for j in range(n):
            out *= a + j
        return out
    k = -n
    den = 1.0
    for j in range(1, k + 1):
        den *= a - j
    if den == 0.0:
        raise GammaPoleError(f"(a)_{n} is infinite at a={a}")
    return 1.0 / den


# --------------------------------------------------------------------------
# half-integer order Bessel functions
# --------------------------------------------------------------------------

BesselKind = Literal["J", "Y", "H1", "I"]


def _sqrt_2_over_pi_x(x: complex) -> complex:
    return cmath.sqrt(2.0 / (math.pi * x))


def _sin_cos(x: complex, x_lo: complex = 0.0):
    """sin and cos of x + x_lo where x_lo carries low-order bits of x."""
    if x_lo == 0:
        return cmath.sin(x), cmath.cos(x)
    s, c = cmath.sin(x), cmath.cos(x)
    sl, cl = cmath.sin(x_lo), cmath.cos(x_lo)
    return s * cl + c * sl, c * cl - s * sl


def _upward(v_m1: complex, v_0: complex, x: complex, n_max: int):
    """Run F_{nu+1} = (2 nu / x) F_nu - F_{nu-1} from nu = 1/2 upward."""
    mant = np.empty(n_max + 1, dtype=complex)
    lsc = np.zeros(n_max + 1)
    prev, cur, off = v_m1, v_0, 0.0
    mant[0] = cur
    for k in range(n_max):
        nxt = (2.0 * (k + 0.5) / x) * cur - prev
        prev, cur = cur, nxt
        if abs(cur) > _BIG:
            prev /= _BIG
            cur /= _BIG
            off += _LOG_BIG
        mant[k + 1] = cur
        lsc[k + 1] = off
    return mant, lsc


def _miller_start(n_max: int, ax: float) -> int:
    top = max(n_max, ax)
    return int(top + 30 + 4 * math.sqrt(top) + 2 * ax ** (1 / 3))


def _miller_j(x: complex, n_max: int):
    """J_{k+1/2}(x), k = 0..n_max, by normalised downward recurrence."""
    start = _miller_start(n_max, abs(x))
    mant = np.empty(n_max + 1, dtype=complex)
    lsc = np.zeros(n_max + 1)
    nxt, cur, off = 0.0j, 1e-300 + 0j, 0.0
    # cur holds order k+1/2 as k runs down from start to -1
    for k in range(start, -1, -1):
        if k <= n_max:
            mant[k] = cur
            lsc[k] = off
        prev = (2.0 * (k + 0.5) / x) * cur - nxt
        nxt, cur = cur, prev
        if abs(cur) > _BIG:
            nxt /= _BIG
            cur /= _BIG
            off += _LOG_BIG
    # cur is now the unnormalised J_{-1/2}; nxt is J_{1/2} at the same scale
    pref = _sqrt_2_over_pi_x(x)
    j_half = pref * cmath.sin(x)
    j_mhalf = pref * cmath.cos(x)
    t = max(abs(nxt), abs(cur))
    u, v = nxt / t, cur / t
    norm = (j_half * u.conjugate() + j_mhalf * v.conjugate()) / ((abs(u) ** 2 + abs(v) ** 2) * t)
    return mant * norm, lsc - off


def bessel_half_ladder(kind: BesselKind, n_max: int, x: complex, x_lo: complex = 0.0):
    """Half-integer order Bessel functions for orders 1/2, 3/2, ..., n_max + 1/2.

    Parameters
    ----------
    kind : {"J", "Y", "H1", "I"}
        Function family.  "I" requires real positive ``x``.
    n_max : int
        Highest order index; order of entry k is k + 1/2.
    x : complex
        Argument, non-zero.  Real or complex (principal branches).
    x_lo : complex, optional
        Low-order part of the argument for double-double phase accuracy at
        large |x|; only the trigonometric starting values use it.

    Returns
    -------
    mant : ndarray of complex
    log_scale : ndarray of float
        Value of order k + 1/2 is ``mant[k] * exp(log_scale[k])``.
    """
    if x == 0:
        raise DomainError("half-integer Bessel functions need x != 0")
    n_max = int(n_max)
    if kind == "I":
        if not (np.isreal(x) and np.real(x) > 0):
            raise DomainError("I ladder needs real positive x")
        xr = float(np.real(x))
        mant, lsc = _miller_j(1j * xr, n_max)
        k = np.arange(n_max + 1)
        # I_nu(x) = exp(-i nu pi / 2) J_nu(i x)
        rot = np.exp(-0.5j * math.pi * (k + 0.5))
        return (mant * rot).real.astype(complex), lsc
    x = complex(x)
    x_lo = complex(x_lo)
    if kind in ("J", "H1"):
        if x.imag == 0 and n_max + 0.5 <= abs(x.real):
            s, c = _sin_cos(x, x_lo)
            pref = _sqrt_2_over_pi_x(x)
            jm, jl = _upward(pref * c, pref * s, x, n_max)
        else:
            jm, jl = _miller_j(x, n_max)
            if x_lo != 0:
                # Miller normalisation uses sin/cos of x only; refine the phase
                s, c = _sin_cos(x, x_lo)
                pref = _sqrt_2_over_pi_x(x)
                true_half = pref * s
                got = jm[0] * math.exp(jl[0])
                if got != 0 and true_half != 0:
                    jm = jm * (true_half / got)
        if kind == "J":
            return jm, jl
    s, c = _sin_cos(x, x_lo)
    pref = _sqrt_2_over_pi_x(x)
    ym, yl = _upward(pref * s, -pref * c, x, n_max)
    if kind == "Y":
        return ym, yl
    if kind == "H1":
        top = np.maximum(jl, yl)
        return jm * np.exp(jl - top) + 1j * ym * np.exp(yl - top), top
    raise ValueError(f"unknown Bessel kind {kind!r}")


def bessel_half(kind: BesselKind, nu: float, x: complex, x_lo: complex = 0.0):
    """Single half-integer order Bessel value.

    Parameters
    ----------
    kind : {"J", "Y", "H1", "I"}
    nu : float
        Order n + 1/2 with n >= 0.
    x : complex
        Argument.

    Returns
    -------
    complex
        For "H1" this is exactly ``J + 1j * Y`` as returned by this function.

    Raises
    ------
    OverflowError
        If the value is not representable (Y at tiny x and large order).
    """
    n = nu - 0.5
    if n < 0 or n != int(n):
        raise DomainError(f"order must be n + 1/2 with n >= 0, got {nu}")
    n = int(n)
    if kind == "H1":
        return bessel_half("J", nu, x, x_lo) + 1j * bessel_half("Y", nu, x, x_lo)
    mant, lsc = bessel_half_ladder(kind, n, x, x_lo)
    if lsc[n] > 700 and mant[n] != 0:
        raise OverflowError(f"{kind}_{nu}({x}) overflows double precision")
    val = complex(mant[n] * math.exp(lsc[n]))
    if kind == "I" or (np.isreal(x) and kind in ("J", "Y")):
        return val.real
    return val


# --------------------------------------------------------------------------
# hypergeometric functions
# --------------------------------------------------------------------------

def _series_2f1(a, b, c, z, max_terms):
    term = 1.0
    acc = [1.0]
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        acc.append(term)
        if term == 0 or abs(term) < 0.25 * _EPS * abs(math.fsum(acc)) and n > 2:
            return math.fsum(acc)
    raise ConvergenceError(f"2F1({a},{b};{c};{z}) did not converge in {max_terms} terms")


def _log_sum(a, b, c0, w, n_max, max_terms):
    """Sum_{n>=0} (a)_n (b)_n / (n! (n+c0)!) w^n [ln w - psi(n+1) - psi(n+c0+1) + psi(a+n) + psi(b+n)].

    Used with a, b already shifted; c0 >= 0 integer.
    """
    lw = math.log(w)
    coef = 1.0 / math.factorial(c0)
    pa, pb = sc.digamma(a), sc.digamma(b)
    p1, p2 = sc.digamma(1.0), sc.digamma(c0 + 1.0)
    acc = []
    for n in range(max_terms):
        t = coef * (lw - p1 - p2 + pa + pb)
        acc.append(t)
        if n > 2 and abs(t) < 0.25 * _EPS * abs(math.fsum(acc)):
            return math.fsum(acc)
        coef *= (a + n) * (b + n) / ((n + 1) * (n + c0 + 1)) * w
        pa += 1.0 / (a + n)
        pb += 1.0 / (b + n)
        p1 += 1.0 / (n + 1)
        p2 += 1.0 / (n + c0 + 1)
    raise ConvergenceError("logarithmic 2F1 connection series did not converge")


def gauss_2f1(a: float, b: float, c: float, z: float, one_minus_z: float | None = None,
              max_terms: int = 100000) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.

    The power series is used for |z| <= 1/2.  Closer to z = 1 the connection
    formulas in 1 - z are used, including the logarithmic cases where c - a - b
    is an integer.  Supplying ``one_minus_z`` avoids the cancellation in
    forming 1 - z near the singular point.

    Raises
    ------
    DomainError
        For z >= 1 or c a non-positive integer.
    ConvergenceError
        If a series exceeds ``max_terms``.
    """
    if c <= 0 and c == math.floor(c):
        raise DomainError("c must not be a non-positive integer")
    w = (1.0 - z) if one_minus_z is None else float(one_minus_z)
    if z == 0:
        return 1.0
    if w <= 0:
        raise DomainError("gauss_2f1 is implemented for z < 1 only")
    if z < -1.0:
        # Pfaff: F(a,b;c;z) = (1-z)^-a F(a, c-b; c; z/(z-1))
        zz = z / (z - 1.0)
        return w ** (-a) * gauss_2f1(a, c - b, c, zz, one_minus_z=1.0 / w, max_terms=max_terms)
    if z <= 0.5:
        return _series_2f1(a, b, c, z, max_terms)
    d = c - a - b
    di = round(d)
    if abs(d - di) > 1e-12:
        t1 = sc.gamma(c) * sc.gamma(d) / (sc.gamma(c - a) * sc.gamma(c - b))
        t2 = sc.gamma(c) * sc.gamma(-d) / (sc.gamma(a) * sc.gamma(b))
        f1 = _series_2f1(a, b, a + b - c + 1.0, w, max_terms)
        f2 = _series_2f1(c - a, c - b, d + 1.0, w, max_terms)
        return t1 * f1 + t2 * w ** d * f2
    if di < 0:
        # Euler: F(a,b;c;z) = (1-z)^(c-a-b) F(c-a, c-b; c; z)
        return w ** d * gauss_2f1(c - a, c - b, c, z, one_minus_z=w, max_terms=max_terms)
    mm = int(di)
    # c - a - b = mm >= 0: finite part plus logarithmic series
    finite = 0.0
    if mm > 0:
        t = 1.0
        parts = [t]
        for n in range(mm - 1):
            t *= (a + n) * (b + n) / ((n + 1) * (1 - mm + n)) * w
            parts.append(t)
        finite = (sc.gamma(mm) * sc.gamma(a + b + mm) / (sc.gamma(a + mm) * sc.gamma(b + mm))
                  * math.fsum(parts))
    ls = _log_sum(a + mm, b + mm, mm, w, mm, max_terms)
    return finite - (-w) ** mm * sc.gamma(a + b + mm) / (sc.gamma(a) * sc.gamma(b)) * ls


def hyp1f2(a: float, b1: float, b2: float, z: complex, max_terms: int = 10000):
    """Generalised hypergeometric 1F2(a; b1, b2; z) by its entire power series.

    Returns
    -------
    value : complex
    abs_sum : float
        Sum of term magnitudes, a cancellation indicator.
    """
    term = 1.0 + 0j
    acc = [term]
    mag = 1.0
    for j in range(max_terms):
        term *= (a + j) / ((b1 + j) * (b2 + j) * (j + 1)) * z
        acc.append(term)
        mag += abs(term)
        if j > 2 and abs(term) < 0.25 * _EPS * mag:
            return csum(acc), mag
    raise ConvergenceError("1F2 series did not converge")


# --------------------------------------------------------------------------
# toroidal harmonics
# --------------------------------------------------------------------------

def _omega_parts(omega: float, omega_m1: float | None):
    wm1 = (omega - 1.0) if omega_m1 is None else float(omega_m1)
    if not wm1 > 0:
        raise DomainError("toroidal harmonics need omega > 1")
    s2 = wm1 * (omega + 1.0)
    return wm1, s2, math.sqrt(s2)


def toroidal_q0(m: int, omega: float, omega_m1: float | None = None) -> float:
    """Q_{m-1/2}(omega), the zero-order toroidal harmonic.

    With omega = cosh(eta) and q = exp(-2 eta) = 1/(omega+s)^2,

        Q_{m-1/2}(omega) = sqrt(pi) Gamma(m+1/2)/m! exp(-(m+1/2) eta)
                           2F1(1/2, m+1/2; m+1; q).

    The series in q has positive terms and is summed directly unless q is
    so close to 1 that the logarithmic connection formula in 1 - q is both
    faster and free of cancellation, which needs (m+1)(1-q) small.
    """
    wm1, s2, s = _omega_parts(omega, omega_m1)
    e = omega + s
    q = 1.0 / (e * e)
    one_minus_q = (wm1 + s) * (e + 1.0) / (e * e)
    a, b, c = 0.5, m + 0.5, m + 1.0
    if q <= 0.5 or (m + 1) * one_minus_q > 0.5:
        f = _series_2f1(a, b, c, q, 1_000_000)
    else:
        f = gauss_2f1(a, b, c, q, one_minus_z=one_minus_q)
    logpref = 0.5 * math.log(math.pi) + sc.gammaln(m + 0.5) - sc.gammaln(m + 1.0) - (m + 0.5) * math.log(e)
    return math.exp(logpref) * f


def toroidal_q_ladder(m: int, mu_max: int, omega: float, omega_m1: float | None = None,
                      half: bool = False) -> np.ndarray:
    """Scaled normalised toroidal harmonics b_mu for mu = 0..mu_max.

    b_mu = (omega^2-1)^(mu/2) QQ^mu_{m-1/2}(omega) with
    QQ^mu = exp(-i mu pi) Q^mu / Gamma(m + mu + 1/2), real for omega > 1.

    Parameters
    ----------
    m : int
        Degree index, degree is m - 1/2.
    mu_max : int
        Number of upward steps; entries are mu = j (or j + 1/2), j = 0..mu_max.
    omega : float
        Toroidal coordinate, > 1.
    omega_m1 : float, optional
        omega - 1 supplied without cancellation.
    half : bool
        If true the orders are j + 1/2.

    Notes
    -----
    Recurrence in the order (upward, the toroidal function is the growing
    solution):
        (nu+mu+2) b_{mu+2} = 2 (mu+1) omega b_{mu+1} + (nu-mu) s^2 b_mu,
    with nu = m - 1/2 and s^2 = omega^2 - 1.  Starting values are the closed
    forms at mu = 1/2, 3/2 or the degree-m and degree-(m+1) functions at
    mu = 0, 1.
    """
    wm1, s2, s = _omega_parts(omega, omega_m1)
    nu = m - 0.5
    out = np.empty(mu_max + 2)
    if half:
        # QQ^{1/2}_nu(cosh eta) = sqrt(pi/(2 sinh eta)) exp(-(nu+1/2) eta)/Gamma(nu+3/2)
        e = omega + s
        out[0] = math.sqrt(math.pi / 2.0) * math.exp(-m * math.log(e) - sc.gammaln(m + 1.0))
        out[1] = (omega + m * s) * out[0] / (m + 1.0)
        mu0 = 0.5
    else:
        q0 = toroidal_q0(m, omega, wm1)
        q1 = toroidal_q0(m + 1, omega, wm1)
        rg = sc.rgamma(m + 0.5)
        out[0] = q0 * rg
        out[1] = (omega * q0 - q1) * rg
        mu0 = 0.0
    with np.errstate(over="ignore", invalid="ignore"):
        for j in range(mu_max - 1):
            mu = mu0 + j
            out[j + 2] = (2.0 * (mu + 1.0) * omega * out[j + 1] + (nu - mu) * s2 * out[j]) / (nu + mu + 2.0)
    return out[: mu_max + 1]


def scaled_q_negative(b: np.ndarray, q: int, s2: float) -> float:
    """b_{-q} = s^{-2q} b_q for the scaled ladder (integer or half ladder index)."""
    return b[q] / s2 ** q


def legendre_q_toroidal(m: int, mu: float, omega: float, omega_m1: float | None = None) -> complex:
    """Toroidal harmonic Q^mu_{m-1/2}(omega), omega > 1 (Hobson definition).

    Integer ``mu`` gives a real value; half-integer ``mu`` a purely imaginary
    one, since Q^mu = exp(i mu pi) Gamma(m + mu + 1/2) QQ^mu with QQ real.

    Raises
    ------
    DomainError
        For omega <= 1 or mu not a non-negative integer or half-integer.
    """
    twice = 2.0 * mu
    if mu < 0 or twice != round(twice):
        raise DomainError("mu must be a non-negative integer or half-integer")
    wm1, s2, s = _omega_parts(omega, omega_m1)
    half = round(twice) % 2 == 1
    j = int(mu - 0.5) if half else int(mu)
    b = toroidal_q_ladder(m, max(j, 1), omega, wm1, half=half)[j]
    if b == 0:
        return 0j
    logmag = sc.gammaln(m + mu + 0.5) + math.log(abs(b)) - mu * math.log(s)
    val = math.copysign(math.exp(logmag), b)
    phase = cmath.exp(1j * math.pi * mu) if half else (-1.0) ** j
    if half:
        return complex(0.0, (phase * val).imag)
    return complex(phase * val, 0.0)


def toroidal_q_integral(m: int, omega: float, omega_m1: float | None = None, tol: float = 1e-14,
                        form: Literal["fourier", "heine"] = "fourier") -> float:
    """Q_{m-1/2}(omega) by adaptive quadrature.

    ``form="fourier"`` integrates cos(m psi)/sqrt(2 omega - 2 cos psi) over
    [0, pi].  Its integrand cancels to a relative size of roughly
    (2 omega)^(-m), so it loses accuracy for large m and omega.
    ``form="heine"`` integrates (omega + sqrt(omega^2-1) cosh t)^(-m-1/2) over
    [0, inf), which is positive and well conditioned everywhere.
    """
    from ._gk import adaptive_gk

    wm1, _, s = _omega_parts(omega, omega_m1)
    if form == "heine":
        a = m + 0.5
        t_knee = math.log(2.0 * omega / s) if s < omega else 0.0
        t_max = t_knee + 40.0 / a

        def g(t):
            return np.exp(-a * np.log(omega + s * np.cosh(t)))

        pts = [0.0] + [t_knee * f for f in (0.5, 1.0) if t_knee > 0] + [t_max]
        pts += list(np.linspace(t_knee, t_max, 9)[1:-1])
        res = adaptive_gk(g, sorted(pts), abs_tol=0.0, rel_tol=tol)
        return res.value.real

    def f(psi):
        d2 = 2.0 * wm1 + 4.0 * np.sin(0.5 * psi) ** 2
        return np.cos(m * psi) / np.sqrt(d2)

    h = math.sqrt(wm1)
    pts = [0.0, math.pi]
    pts += [h * 2.0 ** j for j in range(-2, 60) if h * 2.0 ** j < math.pi]
    if m > 0:
        pts += [(j + 0.5) * math.pi / m for j in range(m)]
    res = adaptive_gk(f, sorted(pts), abs_tol=0.0, rel_tol=tol)
    return res.value.real


# --------------------------------------------------------------------------
# associated Legendre P, xi > 1
# --------------------------------------------------------------------------

def _xi_to_omega(xi: float):
    r = math.sqrt((xi - 1.0) * (xi + 1.0))
    s_om = 1.0 / r
    omega = xi * s_om
    omega_m1 = 1.0 / (r * (xi + r))
    return omega, omega_m1, s_om


def legendre_p(nu: float, mu: int, xi: float) -> float:
    """Associated Legendre function P^mu_nu(xi) of the first kind for xi > 1.

    Hobson's definition on the ray xi > 1 (no Condon-Shortley phase), so
    P^2_2(xi) = 3 (xi^2 - 1).

    Parameters
    ----------
    nu : float
        Integer or half-integer degree.  P_{-nu-1} = P_nu is used for nu < -1/2.
    mu : int
        Non-negative integer order.
    xi : float
        Argument, > 1.
    """
    if not xi > 1:
        raise DomainError("legendre_p is implemented for xi > 1")
    if mu < 0 or int(mu) != mu:
        raise DomainError("order must be a non-negative integer")
    mu = int(mu)
    twice = 2.0 * nu
    if twice != round(twice):
        raise DomainError("degree must be an integer or half-integer")
    if nu < -0.5:
        nu = -nu - 1.0
    if round(twice) % 2 == 0:
        n = int(round(nu))
        if n < mu:
            return 0.0
        s = math.sqrt((xi - 1.0) * (xi + 1.0))
        p_prev = math.exp(sc.gammaln(2 * mu + 1) - sc.gammaln(mu + 1) - mu * math.log(2.0)) * s ** mu
        if n == mu:
            return p_prev
        p_cur = (2 * mu + 1) * xi * p_prev
        for k in range(mu + 1, n):
            p_prev, p_cur = p_cur, ((2 * k + 1) * xi * p_cur - (k + mu) * p_prev) / (k - mu + 1)
        return p_cur
    # half-integer degree nu = p - 1/2 through Whipple at omega = xi / sqrt(xi^2 - 1)
    p = int(round(nu + 0.5))
    omega, omega_m1, s_om = _xi_to_omega(xi)
    b = toroidal_q_ladder(mu, max(p, 1), omega, omega_m1)[p]
    p_neg = math.sqrt(2.0 / math.pi) * math.sqrt(s_om) * b / s_om ** p
    ratio = sc.poch(p - mu + 0.5, 2 * mu)  # Gamma(p+mu+1/2)/Gamma(p-mu+1/2)
    return ratio * p_neg


def legendre_p_integral(nu: float, m: int, xi: float, tol: float = 1e-14) -> float:
    """P^m_nu(xi) from Laplace's integral, an independent oracle.

    P^m_nu(xi) = Gamma(nu+m+1)/(pi Gamma(nu+1)) int_0^pi cos(m t) (xi + sqrt(xi^2-1) cos t)^nu dt
    """
    from ._gk import adaptive_gk

    r = math.sqrt(xi * xi - 1.0)

    def f(t):
        return np.cos(m * t) * (xi + r * np.cos(t)) ** nu

    pts = [0.0, math.pi] + ([(j + 0.5) * math.pi / m for j in range(m)] if m else [])
    res = adaptive_gk(f, sorted(pts), abs_tol=0.0, rel_tol=tol)
    return float(sc.poch(nu + 1.0, m) / math.pi * res.value.real)


def whipple_q_to_p(q_value: complex, alpha: float, mu: float, omega: float) -> complex:
    """Map Q^mu_alpha(omega) to P^{-alpha-1/2}_{-mu-1/2}(omega / sqrt(omega^2 - 1))."""
    s2 = (omega - 1.0) * (omega + 1.0)
    return (s2 ** 0.25 * cmath.exp(-1j * mu * math.pi)
            / (math.sqrt(math.pi / 2.0) * sc.gamma(alpha + mu + 1.0)) * q_value)


def whipple_p_to_q(p_value: complex, alpha: float, mu: float, omega: float) -> complex:
    """Inverse of :func:`whipple_q_to_p`."""
    s2 = (omega - 1.0) * (omega + 1.0)
    return (math.sqrt(math.pi / 2.0) * sc.gamma(alpha + mu + 1.0) * cmath.exp(1j * mu * math.pi)
            / s2 ** 0.25 * p_value)
