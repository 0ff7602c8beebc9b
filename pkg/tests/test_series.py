from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import mp_angular
from ring_helmholtz.coeffs import static_coefficient
from ring_helmholtz.errors import ConvergenceError, DomainError
from ring_helmholtz.hyper2d import SeriesPolicy, g_minus, kdf, lambda_minus_closed
from ring_helmholtz.params import RingConfig, derive, from_dimensionless
from ring_helmholtz.quadrature import quad_angular
from ring_helmholtz.series import (CoeffValue, eval_1f2_series, eval_bessel_jy, eval_besselj_series,
                                   eval_bessely_series, eval_hankel_series, eval_legendre_minus_series,
                                   eval_legendre_plus_series, eval_legendre_series, eval_p_series)

ROW1 = RingConfig(0, 2.0, 0.5, 1.0, 0.5)
ROW2 = RingConfig(0, 2.0, 0.5, 1.0, 1.5)
NEAR = RingConfig(2, 1.0, 1.0, 1.0, 0.1)
TOL10 = SeriesPolicy(rel_tol=1e-10)


def test_hankel_row1():
    rep = eval_hankel_series(derive(ROW1), policy=TOL10)
    assert abs(rep.value - (-0.4332208795 + 0.6063507453j)) < 1e-9
    assert rep.terms_used <= 94 + 20


def test_hankel_far_field_single_term():
    rep = eval_hankel_series(derive(RingConfig(1, 6.0, 1.5, 1.0, 1e7)), policy=TOL10)
    ref = -2.303180610e-14 + 3.865922798e-14j
    assert abs(rep.value - ref) < 1e-9 * abs(ref)
    assert rep.terms_used <= 2


def test_hankel_equals_y_plus_j():
    d = derive(RingConfig(2, 3.0, 0.7, 1.0, 2.0))
    h = eval_hankel_series(d)
    jy = eval_bessel_jy(d)
    assert abs(h.value - jy.value) < 1e-12 * abs(h.value)
    assert abs(h.plus - jy.plus) < 1e-12 * abs(h.value)
    assert abs(h.minus - jy.minus) < 1e-12 * abs(h.value)


def test_bessel_split_row1():
    d = derive(ROW1)
    assert abs(eval_bessely_series(d).value - (-0.4332208795)) < 1e-9
    assert abs(eval_besselj_series(d).value - 0.6063507453j) < 1e-9


def test_bessel_needs_gamma():
    with pytest.raises(DomainError):
        eval_besselj_series(derive(RingConfig(0, 0.0, 0.5, 1.0, 0.5)))


def test_bessel_small_gamma_odd_part_vanishes():
    d = derive(RingConfig(1, 1e-6, 0.5, 1.0, 0.5))
    assert abs(eval_besselj_series(d).value) < 1e-15


def test_bessel_against_closed_form_row7():
    d = derive(RingConfig(3, 5.0, 1.5, 1.0, 1.0))
    from ring_helmholtz.hyper2d import closed_form
    c = closed_form(d)
    assert abs(eval_bessely_series(d).value - c.plus) < 1e-10 * abs(c.value)
    assert abs(eval_besselj_series(d).value - c.minus) < 1e-10 * abs(c.value)


def test_legendre_row1():
    rep = eval_legendre_series(derive(ROW1), policy=TOL10)
    assert abs(rep.value - (-0.4332208795 + 0.6063507453j)) < 1e-9
    assert rep.terms_used <= 10 + 4


def test_legendre_static_limit():
    for m in range(4):
        d = derive(RingConfig(m, 0.0, 0.8, 1.0, 0.4))
        ref = static_coefficient(m, d.omega, d.rR, d.omega_m1)
        assert abs(eval_legendre_plus_series(d).value - ref) < 1e-13 * ref
        assert eval_legendre_minus_series(d).value == 0


def test_legendre_near_ring_table_row():
    rep = eval_legendre_series(derive(RingConfig(1, 1.0, 1.0, 1.0, 1e-9)), policy=SeriesPolicy(rel_tol=1e-8))
    assert abs(rep.value.real - 6.759120567) < 1e-8
    assert rep.terms_used <= 7


def test_minus_q_form_matches_p_form():
    d = derive(NEAR)
    p = eval_legendre_minus_series(d, form="p").value
    q = eval_legendre_minus_series(d, form="q").value
    assert abs(p - q) < 1e-11 * abs(p)


def test_p_series_equals_split_sum():
    d = derive(RingConfig(1, 1.0, 1.0, 1.0, 1.0))
    u = eval_p_series(d).value
    s = eval_legendre_series(d).value
    assert abs(u - s) < 1e-11 * abs(s)
    assert abs(u - (0.1874175169 + 0.1222388714j)) < 1e-9


def test_p_series_static():
    d = derive(RingConfig(2, 0.0, 1.0, 1.0, 0.7))
    assert abs(eval_p_series(d).value - static_coefficient(2, d.omega, 1.0, d.omega_m1)) < 1e-13


def test_onef2_against_kdf():
    d = from_dimensionless(1, 0.5, 1.0)
    rep = eval_1f2_series(d, rR=1.0)
    assert abs(rep.value - g_minus(1, 0.5, 1.0).value) < 1e-11 * abs(rep.value)


def test_onef2_zero_gamma():
    assert eval_1f2_series(derive(RingConfig(0, 0.0, 0.5, 1.0, 0.5))).value == 0


def test_onef2_distinct_from_legendre_minus():
    d = derive(ROW2)
    a = eval_1f2_series(d, policy=TOL10)
    b = eval_legendre_minus_series(d, policy=TOL10, form="q")
    assert abs(a.value - b.value) < 1e-10
    assert abs(a.terms[0] - b.terms[0]) > 1e-3 * abs(b.terms[0])


def test_real_beta_split_is_re_im():
    d = derive(RingConfig(1, 2.2, 0.6, 1.0, 0.8))
    for rep in (eval_hankel_series(d), eval_legendre_series(d), eval_p_series(d)):
        assert abs(rep.plus.imag) < 1e-11 * abs(rep.value)
        assert abs(rep.minus.real) < 1e-11 * abs(rep.value)


def test_complex_beta_against_mpmath():
    c = RingConfig(1, 1.5 + 0.5j, 0.7, 1.0, 0.6)
    ref = mp_angular(1, c.beta, c.r, c.R, c.z)
    d = derive(c)
    for rep in (eval_hankel_series(d), eval_legendre_series(d), eval_p_series(d)):
        assert abs(rep.value - ref) < 1e-11 * abs(ref), rep.method


def test_coeffvalue_split_identity():
    cv = CoeffValue.from_report(eval_legendre_series(derive(ROW1)))
    assert abs(cv.total - (cv.plus + cv.minus)) <= 1e-12 * abs(cv.total)


def test_split_identity_vs_angular():
    for z in (0.5, 1.0, 2.0, 5.0):
        c = RingConfig(1, 1.2, 0.8, 1.0, z)
        q = quad_angular(c).value
        for fn in (eval_hankel_series, eval_bessel_jy):
            rep = fn(derive(c))
            assert abs(rep.plus + rep.minus - q) < 1e-9 * abs(q)


def test_legendre_far_field_overflow_is_reported():
    # far from the ring the Legendre terms grow beyond binary64
    with pytest.raises(ConvergenceError):
        eval_legendre_series(derive(RingConfig(3, 5.0, 1.5, 1.0, 20.0)))


def test_hankel_terms_non_increasing_with_distance():
    counts = [eval_hankel_series(derive(RingConfig(1, 6.0, 1.5, 1.0, z)), policy=TOL10).terms_used
              for z in (0.5, 1, 5, 50, 100, 200, 1000, 5000, 1e4, 1e7)]
    assert counts == sorted(counts, reverse=True)
    assert counts[-1] <= 2


def test_legendre_terms_near_ring():
    for k in range(10):
        rep = eval_legendre_series(derive(RingConfig(1, 1.0, 1.0, 1.0, 10.0 ** -k)),
                                   policy=SeriesPolicy(rel_tol=1e-8))
        assert rep.terms_used <= 8
