from __future__ import annotations

import math

import numpy as np
import pytest

from ring_helmholtz.errors import DomainError, OnRingError
from ring_helmholtz.params import ON_RING_THRESHOLD, RingConfig, derive, from_dimensionless


def test_hand_evaluated_example():
    d = derive(RingConfig(0, 2.0, 0.5, 1.0, 0.5))
    assert d.k2 == pytest.approx(0.8, rel=1e-15)
    assert d.omega == pytest.approx(1.5, rel=1e-15)
    assert d.gamma.real == pytest.approx(2 * math.sqrt(2.5), rel=1e-15)
    assert d.lam.real == pytest.approx(2.0, rel=1e-15)
    assert d.alpha == 0.5


def test_near_ring_keeps_omega_minus_one():
    eps = 1e-9
    d = derive(RingConfig(1, 1.0, 1.0, 1.0, eps))
    assert d.omega_m1 == pytest.approx(eps * eps / 2, rel=1e-15)
    assert d.one_minus_k2 == pytest.approx(d.omega_m1 / (d.omega + 1), rel=1e-15)


def test_static_limit():
    d = derive(RingConfig(2, 0.0, 0.7, 1.2, 0.3))
    assert d.gamma == 0 and d.lam == 0 and d.chi == 0 and d.y == 0
    assert 0 < d.k2 < 1 and d.omega > 1


def test_cross_relations_complex_beta():
    d = derive(RingConfig(1, 1.3 + 0.4j, 0.6, 1.1, -0.8, 0.2))
    assert d.omega == pytest.approx((2 - d.x) / d.x, rel=1e-14)
    assert abs(d.gamma - math.sqrt(2) * d.lam / d.k) < 1e-14 * abs(d.gamma)
    assert abs(d.x * d.y - 2 * d.chi) < 1e-14 * abs(d.chi)


def test_swap_symmetry():
    c = RingConfig(3, 2.5, 0.4, 1.7, 1.1, -0.3)
    a, b = derive(c), derive(c.swapped())
    for name in ("k2", "omega", "omega_m1", "gamma", "lam", "chi", "x", "y"):
        va, vb = getattr(a, name), getattr(b, name)
        assert abs(va - vb) <= 1e-15 * max(abs(va), 1e-300), name


@pytest.mark.parametrize("bad", [
    dict(m=-1), dict(r=0.0), dict(R=-1.0), dict(beta=1 - 0.1j), dict(z=math.inf),
])
def test_invalid_inputs(bad):
    kw = dict(m=0, beta=1.0, r=0.5, R=1.0, z=0.2)
    kw.update(bad)
    with pytest.raises(DomainError):
        derive(RingConfig(**kw))


def test_on_ring():
    with pytest.raises(OnRingError):
        derive(RingConfig(0, 1.0, 1.0, 1.0, 0.0))
    with pytest.raises(OnRingError):
        derive(RingConfig(0, 1.0, 1.0, 1.0, 1e-60))
    assert ON_RING_THRESHOLD < 1e-18  # z = 1e-9 from a unit ring must stay admissible


def test_gamma_double_double_phase():
    # at z = 1e7 the low part of gamma recovers the bits lost in gamma_hi
    c = RingConfig(1, 6.0, 1.5, 1.0, 1e7)
    d = derive(c)
    import mpmath as mp
    mp.mp.dps = 40
    exact = 6 * mp.sqrt(mp.mpf(2.5) ** 2 + mp.mpf(10) ** 14)
    assert abs(float(exact - mp.mpf(d.gamma.real)) - d.gamma_lo.real) < 1e-15


def test_from_dimensionless_round_trip():
    d = derive(RingConfig(2, 1.7, 0.8, 1.0, 0.6))
    e = from_dimensionless(2, d.x, d.y, d.rR)
    assert e.omega == pytest.approx(d.omega, rel=1e-14)
    assert abs(e.lam - d.lam) < 1e-14 * abs(d.lam)
    with pytest.raises(DomainError):
        from_dimensionless(0, 1.0, 0.5)


def test_random_identity_sweep():
    rng = np.random.default_rng(7)
    for _ in range(10_000):
        r, R = rng.uniform(0.05, 5, 2)
        z = rng.uniform(-5, 5)
        d = derive(RingConfig(0, 1.0, r, R, z))
        assert abs(d.omega - (2 - d.x) / d.x) <= 1e-13 * d.omega
