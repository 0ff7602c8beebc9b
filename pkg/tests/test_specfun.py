from __future__ import annotations

import math

import mpmath as mp
import numpy as np
import pytest

from conftest import mp_bold_q_scaled, mp_q
from ring_helmholtz import specfun as S
from ring_helmholtz.errors import DomainError, GammaPoleError


def rel(a, b):
    return abs(a - b) / abs(b)


class TestGamma:
    @pytest.mark.parametrize("x", [0.5, 1.0, 3.7, -0.5, -2.5, 10.25, 1 + 2j, -1.5 + 0.3j])
    def test_gamma_matches_mpmath(self, x):
        assert rel(S.gamma(x), complex(mp.gamma(x))) < 1e-13

    @pytest.mark.parametrize("x", [0, -1, -7])
    def test_gamma_poles_raise(self, x):
        with pytest.raises(GammaPoleError):
            S.gamma(x)

    @pytest.mark.parametrize("x", [0, -1, -7])
    def test_rgamma_zero_at_poles(self, x):
        assert S.rgamma(x) == 0.0

    @pytest.mark.parametrize("a,n", [(0.5, 0), (0.5, 5), (-2.5, 4), (3.25, 7), (0.5, -3), (2.5, -2)])
    def test_pochhammer(self, a, n):
        assert rel(S.pochhammer(a, n), float(mp.rf(a, n))) < 1e-14

    def test_pochhammer_negative_pole(self):
        with pytest.raises(GammaPoleError):
            S.pochhammer(2.0, -2)

    def test_csum_is_correctly_rounded(self):
        vals = [1e16, 1.0, -1e16, 1j, 1e-16j]
        assert S.csum(vals) == complex(1.0, 1.0 + 1e-16)


class TestBessel:
    @pytest.mark.parametrize("kind", ["J", "Y"])
    @pytest.mark.parametrize("x", [0.3, 2.0, 17.5, 250.0, 1.5 + 0.5j])
    def test_ladder_matches_mpmath(self, kind, x):
        n_max = 40
        mant, lsc = S.bessel_half_ladder(kind, n_max, x)
        fn = mp.besselj if kind == "J" else mp.bessely
        for k in (0, 1, 5, 20, 40):
            ref = complex(fn(k + 0.5, x))
            if abs(ref) < 1e-250 or abs(ref) > 1e250:
                continue
            got = mant[k] * math.exp(lsc[k])
            assert rel(got, ref) < 1e-12, (kind, x, k)

    def test_hankel_is_j_plus_iy(self):
        for nu in (0.5, 3.5, 12.5):
            h = S.bessel_half("H1", nu, 3.3)
            assert h == S.bessel_half("J", nu, 3.3) + 1j * S.bessel_half("Y", nu, 3.3)

    @pytest.mark.parametrize("x", [0.1, 4.0, 60.0])
    def test_modified_i(self, x):
        for nu in (0.5, 2.5, 10.5):
            assert rel(S.bessel_half("I", nu, x), float(mp.besseli(nu, x))) < 1e-12

    def test_large_argument_phase_uses_low_part(self):
        # x = hi + lo with lo carrying bits lost in hi
        hi = 1.0e8 + 0.25
        lo = 3.0e-9
        ref = complex(mp.besselj(0.5, mp.mpf(hi) + mp.mpf(lo)))
        got = S.bessel_half("J", 0.5, hi, lo)
        assert abs(got - ref) < 1e-12 * abs(mp.sqrt(2 / (mp.pi * hi)))

    def test_zero_argument_rejected(self):
        with pytest.raises(DomainError):
            S.bessel_half_ladder("J", 3, 0.0)


class TestHypergeometric:
    @pytest.mark.parametrize("a,b,c,z", [
        (1, 1, 2, 0.5), (0.5, 1.5, 3, 0.8), (2.5, 2.5, 5, 0.999), (2.5, 2.5, 5, 1 - 1e-12),
        (0.3, 0.7, 2.2, 0.9), (1.5, 0.5, 1, 0.95), (0.5, 0.5, 1, -3.0), (0.5, 10.5, 11.0, 0.97),
    ])
    def test_gauss_2f1(self, a, b, c, z):
        assert rel(S.gauss_2f1(a, b, c, z), float(mp.hyp2f1(a, b, c, z))) < 1e-12

    def test_gauss_2f1_domain(self):
        with pytest.raises(DomainError):
            S.gauss_2f1(0.5, 0.5, 1.0, 1.0)

    @pytest.mark.parametrize("z", [0.3, -4.0, 12.0 + 3j])
    def test_hyp1f2(self, z):
        val, mag = S.hyp1f2(1.5, 3.5, 4.0, z)
        assert rel(val, complex(mp.hyp1f2(1.5, 3.5, 4.0, z))) < 1e-13
        assert mag >= abs(val) * (1 - 1e-15)


OMEGA_M1 = [1e-18, 1e-9, 1e-4, 0.01, 0.05, 0.1, 0.5, 2.0, 9.0, 99.0, 1e4]


class TestToroidal:
    @pytest.mark.parametrize("m", [0, 1, 2, 5, 18, 40, 64])
    def test_q0_against_mpmath(self, m):
        for wm1 in OMEGA_M1:
            ref = mp_q(m, 0, mp.mpf(1) + mp.mpf(wm1)).real
            assert rel(S.toroidal_q0(m, 1.0 + wm1, wm1), ref) < 1e-13, (m, wm1)

    @pytest.mark.parametrize("m", [0, 1, 3])
    @pytest.mark.parametrize("w", [1.0001, 1.5, 5.0, 400.0])
    def test_integer_ladder(self, m, w):
        L = S.toroidal_q_ladder(m, 30, w)
        for j in (0, 1, 2, 7, 15, 30):
            assert rel(L[j], mp_bold_q_scaled(m, j, w)) < 1e-13

    @pytest.mark.parametrize("m", [0, 2])
    @pytest.mark.parametrize("w", [1.0001, 1.5, 5.0])
    def test_half_ladder(self, m, w):
        H = S.toroidal_q_ladder(m, 20, w, half=True)
        for j in (0, 1, 4, 20):
            assert rel(H[j], mp_bold_q_scaled(m, j + mp.mpf(1) / 2, w)) < 1e-13

    def test_negative_order_reflection(self):
        m, w = 2, 1.7
        b = S.toroidal_q_ladder(m, 4, w)
        s2 = w * w - 1
        for q in (1, 2, 3):
            assert rel(S.scaled_q_negative(b, q, s2), mp_bold_q_scaled(m, -q, w)) < 1e-13

    @pytest.mark.parametrize("mu", [0, 1, 3, 0.5, 2.5])
    def test_legendre_q_toroidal(self, mu):
        got = S.legendre_q_toroidal(2, mu, 1.7)
        ref = mp_q(2, mu, 1.7)
        assert abs(got - ref) < 1e-13 * abs(ref)

    @pytest.mark.parametrize("m", [0, 1, 5])
    @pytest.mark.parametrize("w", [1.01, 1.5, 10.0, 100.0])
    def test_heine_integral_oracle(self, m, w):
        assert rel(S.toroidal_q_integral(m, w, form="heine"), S.toroidal_q0(m, w)) < 1e-12

    @pytest.mark.parametrize("m", [0, 1, 3])
    @pytest.mark.parametrize("w", [1.01, 1.5, 3.0, 10.0])
    def test_fourier_integral_oracle(self, m, w):
        # conditioned only for small m and omega; the cancellation grows like (2 omega)^m
        assert rel(S.toroidal_q_integral(m, w, form="fourier"), S.toroidal_q0(m, w)) < 1e-10

    def test_omega_at_one_rejected(self):
        with pytest.raises(DomainError):
            S.toroidal_q0(0, 1.0)


class TestLegendreP:
    @pytest.mark.parametrize("nu", [0, 1, 4, 0.5, 2.5, 7.5, -1.5])
    @pytest.mark.parametrize("mu", [0, 1, 3])
    def test_against_mpmath(self, nu, mu):
        xi = 1.3
        ref = float(mp.re(mp.legenp(nu, mu, xi, type=3)))
        got = S.legendre_p(nu, mu, xi)
        assert abs(got - ref) <= 1e-12 * max(abs(ref), 1e-300)

    def test_hobson_sign(self):
        xi = 2.0
        assert math.isclose(S.legendre_p(2, 2, xi), 3 * (xi * xi - 1), rel_tol=1e-14)

    @pytest.mark.parametrize("nu,m", [(2.5, 1), (0.5, 0), (3, 2)])
    def test_laplace_integral_oracle(self, nu, m):
        xi = 1.8
        assert rel(S.legendre_p_integral(nu, m, xi), S.legendre_p(nu, m, xi)) < 1e-12

    def test_whipple_round_trip(self):
        q = S.legendre_q_toroidal(1, 2, 2.5)
        p = S.whipple_q_to_p(q, 0.5, 2, 2.5)
        assert abs(S.whipple_p_to_q(p, 0.5, 2, 2.5) - q) < 1e-14 * abs(q)

    def test_whipple_against_mpmath(self):
        m, mu, w = 1, 2, 2.5
        xi = w / math.sqrt(w * w - 1)
        p = S.whipple_q_to_p(S.legendre_q_toroidal(m, mu, w), m - 0.5, mu, w)
        ref = complex(mp.legenp(-mu - 0.5, -(m - 0.5) - 0.5, xi, type=3))
        assert abs(p - ref) < 1e-13 * abs(ref)


class TestIdentities:
    @pytest.mark.parametrize("m", range(9))
    def test_reflection_half_integer(self, m):
        assert rel(S.gamma(0.5 - m) * S.gamma(0.5 + m), (-1) ** m * math.pi) < 1e-13

    @pytest.mark.parametrize("x", [0.25, 0.5, 1.75, 5.5])
    def test_duplication(self, x):
        rhs = 2 ** (2 * x - 1) / math.sqrt(math.pi) * S.gamma(x) * S.gamma(x + 0.5)
        assert rel(S.gamma(2 * x), rhs) < 1e-12

    def test_spot_values(self):
        assert math.isclose(S.gamma(0.5), math.sqrt(math.pi), rel_tol=1e-15)
        assert math.isclose(S.gamma(3.5), 15 * math.sqrt(math.pi) / 8, rel_tol=1e-15)
        assert math.isclose(S.pochhammer(0.5, 3), 15 / 8, rel_tol=1e-15)
        assert S.pochhammer(7.3, 0) == 1.0
        assert math.isclose(S.pochhammer(1.5, -1), 2.0, rel_tol=1e-15)

    def test_bessel_closed_forms(self):
        assert math.isclose(S.bessel_half("J", 0.5, math.pi / 2).real, 2 / math.pi, rel_tol=1e-14)
        assert math.isclose(S.bessel_half("Y", 0.5, math.pi).real, math.sqrt(2 / math.pi ** 2), rel_tol=1e-14)

    def test_2f1_elementary(self):
        assert S.gauss_2f1(0.3, 0.4, 0.5, 0.0) == 1.0
        assert math.isclose(S.gauss_2f1(1, 1, 2, 0.5), 2 * math.log(2.0), rel_tol=1e-15)

    def test_q_spot_value(self):
        # int_0^pi dpsi / sqrt(6 - 2 cos psi) evaluated in 40 digits
        ref = float(mp.quad(lambda p: 1 / mp.sqrt(6 - 2 * mp.cos(p)), [0, mp.pi]))
        assert math.isclose(ref, 1.3110287771, rel_tol=1e-10)
        assert math.isclose(S.toroidal_q0(0, 3.0), ref, rel_tol=1e-14)
        assert math.isclose(S.legendre_q_toroidal(0, 0, 3.0).real, ref, rel_tol=1e-14)

    @pytest.mark.parametrize("m", range(7))
    @pytest.mark.parametrize("w", [1.01, 1.5, 3.0, 10.0, 100.0])
    def test_q_against_angular_and_heine(self, m, w):
        q = S.toroidal_q0(m, w)
        assert rel(q, S.toroidal_q_integral(m, w, form="heine")) < 1e-11

    def test_half_order_purely_imaginary(self):
        v = S.legendre_q_toroidal(2, 2.5, 1.8)
        assert abs(v.real) < 1e-14 * abs(v.imag)

    def test_2f1_quadratic_relation_to_q(self):
        # Q_{m-1/2}(omega) from 2F1(m+1/2, m+1/2; 2m+1; k^2) with k^2 = 2/(omega+1)
        w = 1.5
        k2 = 2 / (w + 1)
        for m in range(4):
            a = m + 0.5
            lhs = (math.sqrt(math.pi) * S.gamma(a) / math.factorial(m) * (k2 / 4) ** a
                   * S.gauss_2f1(a, a, 2 * a, k2))
            assert rel(lhs, S.toroidal_q0(m, w)) < 1e-12

    @pytest.mark.parametrize("nu", [0.5, 1.5, 4.5])
    def test_p_degree_reflection(self, nu):
        assert rel(S.legendre_p(-nu - 1, 2, 1.4), S.legendre_p(nu, 2, 1.4)) < 1e-12

    def test_legendre_p_spot(self):
        assert S.legendre_p(1, 0, 1.7) == pytest.approx(1.7, rel=1e-15)
        assert S.legendre_p(2, 2, 3.0) == pytest.approx(24.0, rel=1e-14)
        xi = 3 / math.sqrt(8)
        assert rel(S.legendre_p(0.5, 1, xi), S.legendre_p_integral(0.5, 1, xi)) < 1e-12

    def test_p_domain(self):
        with pytest.raises(DomainError):
            S.legendre_p(1, 0, 1.0)

    @pytest.mark.parametrize("m", [0, 1, 3])
    @pytest.mark.parametrize("mu", [0, 1, 2, 0.5, 1.5])
    @pytest.mark.parametrize("w", [1.2, 2.0, 6.0])
    def test_whipple_grid_round_trip(self, m, mu, w):
        q = S.legendre_q_toroidal(m, mu, w)
        back = S.whipple_p_to_q(S.whipple_q_to_p(q, m - 0.5, mu, w), m - 0.5, mu, w)
        assert abs(back - q) <= 1e-10 * abs(q)
