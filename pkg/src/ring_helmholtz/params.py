"""
Ring geometry and the dimensionless parameters of the coefficient problem.

For a field point (r, z), a ring of radius R at height Z and wavenumber beta:

    omega = (r^2 + R^2 + (z-Z)^2) / (2 r R)          toroidal variable
    k^2   = 4 r R / ((r+R)^2 + (z-Z)^2)             elliptic modulus squared
    gamma = beta sqrt((r+R)^2 + (z-Z)^2)
    lambda = beta sqrt(2 r R),  chi = lambda^2 / 4
    x = k^2,  y = gamma^2 / 4,  alpha = m + 1/2

so that omega = (2 - x)/x, gamma = sqrt(2) lambda / k and chi = x y / 2.

omega - 1 = ((r-R)^2 + (z-Z)^2) / (2 r R) is carried separately so that points
very close to the ring keep full relative accuracy in omega - 1.  gamma is
also carried as an unevaluated sum hi + lo so that the phase of exp(i gamma)
stays accurate when gamma is of order 1e8.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, OnRingError

# omega - 1 below this is treated as on the ring; see the decisions ledger
ON_RING_THRESHOLD = 1e-100


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a: float, b: float):
    p = a * b
    return p, _dekker_err(a, b, p)


def _split(a: float):
    c = 134217729.0 * a
    hi = c - (c - a)
    return hi, a - hi


def _dekker_err(a: float, b: float, p: float) -> float:
    ah, al = _split(a)
    bh, bl = _split(b)
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_square(h: float, l: float):
    p, e = _two_prod(h, h)
    e += 2.0 * h * l
    return _two_sum(p, e)


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    e += al + bl
    return _two_sum(s, e)


def _dd_sqrt(h: float, l: float):
    if h <= 0:
        return 0.0, 0.0
    q = math.sqrt(h)
    p, e = _two_prod(q, q)
    corr = ((h - p) - e + l) / (2.0 * q)
    return _two_sum(q, corr)


def _dd_mul_scalar(bh: float, ah: float, al: float):
    p, e = _two_prod(bh, ah)
    e += bh * al
    return _two_sum(p, e)


@dataclass(frozen=True)
class RingConfig:
    """Physical inputs of one coefficient evaluation.

    Attributes
    ----------
    m : int
        Azimuthal mode, >= 0.
    beta : complex
        Wavenumber; Im(beta) >= 0.
    r, R : float
        Field and ring radii, both > 0.
    z, Z : float
        Field and ring heights.
    """

    m: int
    beta: complex
    r: float
    R: float
    z: float
    Z: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "m", int(self.m))
        for name in ("r", "R", "z", "Z"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def validate(self) -> None:
        if self.m < 0:
            raise DomainError("mode m must be >= 0")
        if not (self.r > 0 and self.R > 0):
            raise DomainError("r and R must be positive")
        if not all(math.isfinite(v) for v in (self.r, self.R, self.z, self.Z)):
            raise DomainError("geometry must be finite")
        if not (cmath.isfinite(self.beta) and self.beta.imag >= 0):
            raise DomainError("beta must be finite with Im(beta) >= 0")
        if self.r == self.R and self.z == self.Z:
            raise OnRingError("field point lies on the ring")

    @property
    def rR(self) -> float:
        return self.r * self.R

    def swapped(self) -> "RingConfig":
        """Same configuration with field and source roles exchanged."""
        return RingConfig(self.m, self.beta, self.R, self.r, self.Z, self.z)

    def with_mode(self, m: int) -> "RingConfig":
        return RingConfig(m, self.beta, self.r, self.R, self.z, self.Z)


@dataclass(frozen=True)
class Dimensionless:
    """Derived parameters of one configuration.

    ``gamma_lo`` is the low-order part of gamma (gamma_hi + gamma_lo to
    roughly double-double accuracy for real beta).  ``s`` is
    sqrt(omega^2 - 1) formed from ``omega_m1`` without cancellation.
    """

    m: int
    k2: float
    omega: float
    omega_m1: float
    s: float
    gamma: complex
    gamma_lo: complex
    lam: complex
    chi: complex
    x: float
    y: complex
    alpha: float
    rR: float

    @property
    def k(self) -> float:
        return math.sqrt(self.k2)

    @property
    def one_minus_k2(self) -> float:
        # 1 - k^2 = (omega - 1)/(omega + 1)
        return self.omega_m1 / (self.omega + 1.0)


def derive(config: RingConfig) -> Dimensionless:
    """Dimensionless parameter set for a configuration.

    Raises
    ------
    OnRingError
        If the field point is on the ring or omega - 1 underflows the
        working threshold.
    DomainError
        For invalid inputs.
    """
    config.validate()
    r, R = config.r, config.R
    dz = config.z - config.Z
    dzh, dzl = _two_sum(config.z, -config.Z)
    sph, spl = _two_sum(r, R)
    dr = r - R
    two_rr = 2.0 * r * R
    omega_m1 = (dr * dr + dz * dz) / two_rr
    if not omega_m1 > ON_RING_THRESHOLD:
        raise OnRingError(f"field point is on the ring (omega - 1 = {omega_m1:g})")
    omega = 1.0 + omega_m1
    # rho^2 = (r+R)^2 + dz^2 in double-double
    a2h, a2l = _dd_square(sph, spl)
    b2h, b2l = _dd_square(dzh, dzl)
    rho2h, rho2l = _dd_add(a2h, a2l, b2h, b2l)
    rhoh, rhol = _dd_sqrt(rho2h, rho2l)
    k2 = 4.0 * r * R / rho2h
    beta = config.beta
    if beta.imag == 0:
        gh, gl = _dd_mul_scalar(beta.real, rhoh, rhol)
        gamma, gamma_lo = complex(gh), complex(gl)
    else:
        gamma = beta * rhoh
        gamma_lo = beta * rhol
    lam = beta * math.sqrt(two_rr)
    chi = lam * lam / 4.0
    y = gamma * gamma / 4.0
    return Dimensionless(
        m=config.m,
        k2=k2,
        omega=omega,
        omega_m1=omega_m1,
        s=math.sqrt(omega_m1 * (omega + 1.0)),
        gamma=gamma,
        gamma_lo=gamma_lo,
        lam=lam,
        chi=chi,
        x=k2,
        y=y,
        alpha=config.m + 0.5,
        rR=r * R,
    )


def from_dimensionless(m: int, x: float, y: complex, rR: float = 1.0) -> Dimensionless:
    """Build a parameter set directly from (x, y); used by the dimensionless forms.

    gamma is taken as the principal square root of 4 y.
    """
    if not 0 < x < 1:
        raise DomainError("x = k^2 must lie in (0, 1)")
    omega_m1 = 2.0 * (1.0 - x) / x
    omega = 1.0 + omega_m1
    gamma = 2.0 * cmath.sqrt(complex(y))
    lam = gamma * math.sqrt(x / 2.0)
    return Dimensionless(
        m=int(m), k2=x, omega=omega, omega_m1=omega_m1,
        s=math.sqrt(omega_m1 * (omega + 1.0)), gamma=gamma, gamma_lo=0j,
        lam=lam, chi=lam * lam / 4.0, x=x, y=complex(y), alpha=m + 0.5, rR=rR,
    )
