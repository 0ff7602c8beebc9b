"""Shared reference implementations (mpmath) for the test suite."""

from __future__ import annotations

import mpmath as mp
import pytest

mp.mp.dps = 40


def mp_q(m: int, mu, omega) -> complex:
    """Toroidal Q^mu_{m-1/2}(omega), Hobson definition, from mpmath."""
    return complex(mp.legenq(m - mp.mpf(1) / 2, mu, mp.mpf(omega), type=3))


def mp_bold_q_scaled(m: int, mu, omega) -> float:
    """s^mu exp(-i mu pi) Q^mu / Gamma(m + mu + 1/2), real for omega > 1."""
    nu = m - mp.mpf(1) / 2
    w = mp.mpf(omega)
    s = mp.sqrt(w * w - 1)
    val = s ** mu * mp.legenq(nu, mu, w, type=3) * mp.exp(-1j * mu * mp.pi) / mp.gamma(nu + mu + 1)
    return float(mp.re(val))


def mp_angular(m: int, beta: complex, r: float, R: float, z: float, Z: float = 0.0) -> complex:
    """Defining angular integral in 40-digit arithmetic."""
    beta = mp.mpc(beta)
    c0 = mp.mpf(r - R) ** 2 + mp.mpf(z - Z) ** 2
    c1 = 4 * mp.mpf(r) * mp.mpf(R)

    def f(psi):
        d = mp.sqrt(c0 + c1 * mp.sin(psi / 2) ** 2)
        return mp.exp(1j * beta * d) / d * mp.cos(m * psi)

    pts = mp.linspace(0, mp.pi, 4 * m + 9)
    return complex(mp.quad(f, pts) / mp.pi)


@pytest.fixture(scope="session")
def mpmath():
    return mp


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
