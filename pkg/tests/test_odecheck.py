from __future__ import annotations

import math

import numpy as np
import pytest

from ring_helmholtz.hyper2d import g_minus, g_plus, horn_h3, kdf
from ring_helmholtz.odecheck import (g_minus_derivs, g_plus_derivs, h3_partials, kdf_partials,
                                     legendre_residual, ode_coefficients_omega, ode_coefficients_x,
                                     ode_residual_omega, ode_residual_x, omega_operator_in_x,
                                     pde_residual_h3, pde_residual_kdf, relative_residual,
                                     yhat_omega_derivs)
from ring_helmholtz.specfun import toroidal_q0

XS = np.linspace(0.05, 0.95, 10)
YS = np.linspace(0.1, 10.0, 10)


def grid_max(m, fn, coefficients=None):
    worst = 0.0
    for x in XS:
        for y in YS:
            c = None if coefficients is None else coefficients(m, x, y)
            worst = max(worst, ode_residual_x(m, y, x, fn(m, x, y), c))
    return worst


@pytest.mark.parametrize("m", [0, 2])
@pytest.mark.parametrize("fn", [g_plus_derivs, g_minus_derivs], ids=["plus", "minus"])
def test_x_equation_grid(m, fn):
    assert grid_max(m, fn) < 1e-10


def test_derivs_zeroth_entry_is_value():
    assert abs(g_plus_derivs(1, 0.4, 2.0)[0] - g_plus(1, 0.4, 2.0).value) < 1e-14
    assert abs(g_minus_derivs(1, 0.4, 2.0)[0] - g_minus(1, 0.4, 2.0).value) < 1e-14


def test_derivative_along_fixed_chi_finite_difference():
    # d/dx at fixed x y: g(x+h, y x/(x+h))
    x, y, h = 0.4, 2.0, 1e-5
    chi = x * y
    f = lambda t: g_plus(1, t, chi / t).value
    fd = (f(x + h) - f(x - h)) / (2 * h)
    assert abs(fd - g_plus_derivs(1, x, y)[1]) < 1e-7 * abs(fd)


@pytest.mark.parametrize("j", range(5))
def test_sentinel_perturbation_detected(j):
    def perturbed(m, x, y):
        c = ode_coefficients_x(m, x, y)
        c[j] *= 1.01
        return c

    assert grid_max(2, g_plus_derivs, perturbed) > 1e-4


def test_transposed_coefficient_set_fails():
    # derivatives taken along fixed y instead of fixed chi do not satisfy the equation
    def fixed_y(m, x, y):
        a = m + 0.5
        return [(y * y), -2 * a * (a - 1) * x, (6 - a * (a - 1)) * x * x, 6 * x ** 3, (1 - x) * x ** 4]

    assert grid_max(0, g_plus_derivs, fixed_y) > 1e-4


def test_omega_equation_random_points():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(0, 4))
        lam = rng.uniform(0.1, 3.0) * (1 if rng.random() < 0.7 else 1j)
        w = 1.0 + 10 ** rng.uniform(-1, 0.5)
        worst = max(worst, ode_residual_omega(m, lam, w, yhat_omega_derivs(m, lam, w)))
    assert worst < 1e-10


def test_omega_equation_static():
    d = yhat_omega_derivs(1, 0.0, 1.7)
    assert abs(d[0] - math.sqrt(2) * toroidal_q0(1, 1.7)) < 1e-13
    assert ode_residual_omega(1, 0.0, 1.7, d) < 1e-12


def test_operator_equivalence():
    rng = np.random.default_rng(5)
    for _ in range(20):
        m = int(rng.integers(0, 5))
        lam = rng.uniform(0.1, 4.0)
        x = rng.uniform(0.05, 0.95)
        y = lam * lam / (2 * x)  # x y = lam^2 / 2
        B = omega_operator_in_x(m, lam, x)
        C = ode_coefficients_x(m, x, y)
        assert np.max(np.abs(C + 4.0 / x ** 2 * B)) < 1e-12 * np.max(np.abs(C))


def test_legendre_residual_finite_difference():
    for m, w, tol in [(2, 3.0, 1e-7), (0, 1.1, 1e-6)]:
        h = 1e-3 * (w - 1)
        f = [toroidal_q0(m, w + k * h) for k in (-2, -1, 0, 1, 2)]
        q1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
        q2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
        assert legendre_residual(m, w, f[2], q1, q2) < tol


def test_pde_h3():
    a = 2.5
    for x, y in [(0.3, 0.7), (0.8, 4.0), (0.5, -2.0)]:
        p = h3_partials(a, x, y)
        assert abs(p[0] - horn_h3(a, x, y).value) < 1e-13 * abs(p[0])
        assert max(pde_residual_h3(a, x, y, p)) < 1e-12


def test_pde_kdf():
    a = 1.5
    for u, v in [(0.3, -0.7), (2.0, -5.0), (-1.0, 3.0)]:
        p = kdf_partials(a, u, v)
        assert abs(p[0] - kdf(a, u, v).value) < 1e-13 * abs(p[0])
        assert max(pde_residual_kdf(a, u, v, p)) < 1e-12


def test_relative_residual_zero_input():
    assert relative_residual([0, 0, 0]) == 0.0
    assert relative_residual([1, -1]) == 0.0
    assert relative_residual([1, 1]) == 1.0


def test_omega_coefficients_shape():
    c = ode_coefficients_omega(0, 2.0, 3.0)
    assert c.shape == (5,) and c[4] == 1 - 9
