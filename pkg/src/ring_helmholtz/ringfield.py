"""
Helmholtz field of a thin ring source assembled from the Fourier coefficients.

A source profile f(phi) on the ring is expanded as

    f = sum_m eps_m (a_m cos(m phi) + b_m sin(m phi)),
    a_m = (1/2pi) int f cos(m phi),  b_m = (1/2pi) int f sin(m phi),  b_0 = 0,

with the Neumann factor eps_0 = 1, eps_m = 2.  The ring field is

    Phi = -1/2 sum_m (a_m cos(m phi) + b_m sin(m phi)) eps_m G^m,

and the free-space Green function -exp(i beta D) / (4 pi D) has the
azimuthal expansion -1/(4 pi) sum_m eps_m G^m cos(m (phi - phi')).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .coeffs import compute_coefficient
from .errors import DomainError
from .hyper2d import MethodReport, SeriesPolicy
from .params import RingConfig

DEFAULT_MODES = 40


def neumann(m: int) -> int:
    return 1 if m == 0 else 2


@dataclass(frozen=True)
class FourierSource:
    """Cosine and sine coefficients a_0..a_M, b_0..b_M of a ring profile (b_0 = 0)."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).copy()
        b = np.asarray(self.b, dtype=float).copy()
        if a.ndim != 1 or a.shape != b.shape or a.size == 0:
            raise DomainError("a and b must be 1-D arrays of equal, non-zero length")
        if b[0] != 0.0:
            raise DomainError("b[0] must be exactly 0")
        a.flags.writeable = False
        b.flags.writeable = False
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def M(self) -> int:
        return self.a.size - 1

    def __add__(self, other: "FourierSource") -> "FourierSource":
        n = max(self.a.size, other.a.size)
        return FourierSource(_pad(self.a, n) + _pad(other.a, n), _pad(self.b, n) + _pad(other.b, n))

    def scale(self, c: float) -> "FourierSource":
        return FourierSource(c * self.a, c * self.b)


def _pad(v: np.ndarray, n: int) -> np.ndarray:
    return np.concatenate([v, np.zeros(n - v.size)])


def analyze_source(samples, M: int, phi0: float = 0.0) -> FourierSource:
    """Fourier coefficients of a periodic profile sampled at phi_j = phi0 + 2 pi j / N.

    The trapezoidal rule (via the FFT) is spectrally accurate for smooth
    periodic f.  A warning is issued when N < 4 M + 4; modes above N/2 are
    not resolved and are returned as 0.
    """
    f = np.asarray(samples, dtype=float)
    if f.ndim != 1 or f.size == 0 or not np.all(np.isfinite(f)):
        raise DomainError("samples must be a non-empty 1-D array of finite values")
    if M < 0:
        raise DomainError("M must be >= 0")
    n = f.size
    if n < 4 * M + 4:
        warnings.warn(f"{n} samples for M = {M}: fewer than 4M+4, modes may alias", stacklevel=2)
    F = np.fft.rfft(f) / n
    if phi0 != 0.0:
        F = F * np.exp(-1j * np.arange(F.size) * phi0)
    a = np.zeros(M + 1)
    b = np.zeros(M + 1)
    k = min(M, F.size - 1)
    a[: k + 1] = F[: k + 1].real
    b[1: k + 1] = -F[1: k + 1].imag
    if n % 2 == 0 and k == n // 2:
        # the Nyquist mode is shared between +/- frequencies
        a[k] *= 0.5
        b[k] = 0.0
    return FourierSource(a, b)


def synthesize(src: FourierSource, phi) -> np.ndarray:
    """Profile f(phi) rebuilt from its coefficients."""
    phi = np.asarray(phi, dtype=float)
    out = np.full(phi.shape, src.a[0])
    for m in range(1, src.M + 1):
        out = out + 2.0 * (src.a[m] * np.cos(m * phi) + src.b[m] * np.sin(m * phi))
    return out


@dataclass
class FieldResult:
    value: complex
    reports: list[MethodReport] = field(default_factory=list)
    tail_estimate: float = 0.0


def ring_solution_detailed(src: FourierSource, beta: complex, r: float, phi: float, z: float,
                           R: float, Z: float = 0.0, method: str = "auto",
                           policy: SeriesPolicy | None = None) -> FieldResult:
    """Ring field with the per-mode coefficient reports.

    ``tail_estimate`` is the sum of the magnitudes of the last two mode
    contributions, a proxy for the truncation error in M.
    """
    contrib = []
    reports = []
    for m in range(src.M + 1):
        rep = compute_coefficient(RingConfig(m, beta, r, R, z, Z), method, policy)
        reports.append(rep)
        w = src.a[m] * math.cos(m * phi) + src.b[m] * math.sin(m * phi)
        contrib.append(-0.5 * neumann(m) * w * rep.value)
    value = complex(math.fsum(c.real for c in contrib), math.fsum(c.imag for c in contrib))
    tail = float(sum(abs(c) for c in contrib[-2:]))
    return FieldResult(value, reports, tail)


def ring_solution(src: FourierSource, beta: complex, r: float, phi: float, z: float,
                  R: float, Z: float = 0.0, method: str = "auto",
                  policy: SeriesPolicy | None = None) -> complex:
    """Ring field Phi at (r, phi, z) for a ring of radius R at height Z."""
    return ring_solution_detailed(src, beta, r, phi, z, R, Z, method, policy).value


def greens_partial_sum(beta: complex, r: float, R: float, z: float, Z: float, dphi: float,
                       M: int = DEFAULT_MODES, method: str = "auto",
                       policy: SeriesPolicy | None = None) -> complex:
    """Green function from modes 0..M of its azimuthal expansion; dphi = phi - phi'."""
    total = []
    for m in range(M + 1):
        g = compute_coefficient(RingConfig(m, beta, r, R, z, Z), method, policy).value
        total.append(-neumann(m) * g * math.cos(m * dphi) / (4.0 * math.pi))
    return complex(math.fsum(t.real for t in total), math.fsum(t.imag for t in total))


def greens_closed_form(beta: complex, r: float, R: float, z: float, Z: float, dphi: float) -> complex:
    """-exp(i beta D) / (4 pi D), D^2 = (r-R)^2 + 4 r R sin^2(dphi/2) + (z-Z)^2."""
    D = math.sqrt((r - R) ** 2 + 4.0 * r * R * math.sin(0.5 * dphi) ** 2 + (z - Z) ** 2)
    if D == 0:
        raise DomainError("source and field points coincide")
    return -np.exp(1j * complex(beta) * D) / (4.0 * math.pi * D)
