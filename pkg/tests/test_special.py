import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvpot import special
from solvpot.errors import ConstructionFailed, PoleAt

mpmath.mp.dps = 30


def _mp_gamma(z):
    return complex(mpmath.gamma(mpmath.mpc(z.real, z.imag)))


def _mp_jacobi(n, a, b, z):
    return complex(mpmath.jacobi(n, a, b, mpmath.mpc(z.real, z.imag)))


class TestGamma:
    def test_factorial(self):
        assert special.gamma_complex(5.0) == pytest.approx(24.0, rel=1e-14)

    def test_half(self):
        assert special.gamma_complex(0.5).real == pytest.approx(1.7724538509055159, rel=1e-14)

    def test_one_plus_i(self):
        g = special.gamma_complex(1 + 1j)
        assert abs(g - _mp_gamma(1 + 1j)) <= 1e-12 * abs(g)
        assert g.real == pytest.approx(0.49802, abs=5e-6)
        assert g.imag == pytest.approx(-0.15495, abs=5e-6)

    @pytest.mark.parametrize("z", [0.0, -1.0, -7.0, -3 + 0j])
    def test_poles(self, z):
        with pytest.raises(PoleAt):
            special.gamma_complex(z)

    def test_array_against_mpmath(self):
        rng = np.random.default_rng(1)
        z = rng.uniform(-20, 20, 200) + 1j * rng.uniform(-20, 20, 200)
        g = special.gamma_complex(z)
        ref = np.array([_mp_gamma(v) for v in z])
        assert np.max(np.abs(g - ref) / np.abs(ref)) <= 1e-12

    def test_rgamma_zero_at_poles(self):
        assert special.rgamma(np.array([0.0, -1.0, -4.0])).tolist() == [0, 0, 0]
        assert special.rgamma(3.5) * special.gamma_complex(3.5) == pytest.approx(1.0, rel=1e-14)

    @given(st.floats(-30, 30), st.floats(0.01, 30))
    @settings(max_examples=100, deadline=None)
    def test_conjugation_modulus(self, x, y):
        z = complex(x, y)
        assert abs(special.gamma_complex(z.conjugate())) == pytest.approx(
            abs(special.gamma_complex(z)), rel=1e-12)


class TestJacobi:
    def test_degree_zero(self):
        assert special.jacobi(0, 3.3, -7.1, 0.4 + 2j) == 1.0

    def test_degree_one(self):
        assert special.jacobi(1, 2.0, 1.0, 0.0) == pytest.approx(0.5, abs=1e-15)

    def test_finite_sum_example(self):
        v = special.jacobi(2, 1.0, 0.5, 0.3)
        assert v == pytest.approx(_mp_jacobi(2, 1.0, 0.5, 0.3).real, abs=1e-12)
        assert v == pytest.approx(special.jacobi_sum(2, 1.0, 0.5, 0.3), abs=1e-12)

    def test_random_against_finite_sum(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            n = int(rng.integers(0, 11))
            a, b = rng.uniform(-5, 5, 2)
            z = rng.uniform(-1, 1)
            assert special.jacobi(n, a, b, z) == pytest.approx(
                special.jacobi_sum(n, a, b, z), abs=1e-10)

    def test_complex_argument_against_mpmath(self):
        for n, a, b, z in [(4, 1.5, -5.7, 2j), (6, -4.2, 0.3, 1.5 - 0.5j), (3, 0.5, 0.5, 3.0 + 0j)]:
            assert special.jacobi(n, a, b, z) == pytest.approx(_mp_jacobi(n, a, b, z), rel=1e-12)

    def test_degenerate_recurrence_falls_back(self):
        # alpha + beta = -3 makes the k = 3 denominator vanish
        v = special.jacobi(3, -1.0, -2.0, 0.7)
        assert v == pytest.approx(special.jacobi_sum(3, -1.0, -2.0, 0.7), abs=1e-12)

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            special.jacobi(-1, 0.0, 0.0, 0.0)


class TestJacobiDerivative:
    def test_degree_zero(self):
        assert special.jacobi_derivative(0, 1.0, 2.0, 0.3) == 0.0

    @pytest.mark.parametrize("z", [-0.9, 0.0, 0.4, 5.0])
    def test_linear_slope(self, z):
        assert special.jacobi_derivative(1, 2.0, 1.0, z) == pytest.approx(2.5, abs=1e-14)

    def test_against_finite_difference(self):
        h = 1e-5
        fd = (special.jacobi(3, 0.7, -0.2, 0.4 + h) - special.jacobi(3, 0.7, -0.2, 0.4 - h)) / (2 * h)
        assert special.jacobi_derivative(3, 0.7, -0.2, 0.4) == pytest.approx(fd, abs=1e-8)

    def test_second_derivative(self):
        coef = special.jacobi_coefficients(5, -1.3, 2.2).deriv(2)
        assert special.jacobi_derivative(5, -1.3, 2.2, 0.35, order=2) == pytest.approx(
            coef(0.35), rel=1e-12)


class TestXmJacobi:
    def test_m0_is_jacobi_bitwise(self):
        z = np.linspace(-3, 3, 11)
        assert np.array_equal(special.xm_jacobi(4, 0, 1.2, -3.4, z), special.jacobi(4, 1.2, -3.4, z))

    @pytest.mark.parametrize("n,m", [(0, 1), (2, 1), (1, 2), (3, 3)])
    def test_degree_property(self, n, m):
        a, b = 1.3, -4.7
        z = np.linspace(-2, 2, n + m + 6)
        vals = special.xm_jacobi(n, m, a, b, z)
        coef = np.polynomial.polynomial.polyfit(z, vals, n + m + 3)
        assert np.max(np.abs(coef[n + m + 1:])) <= 1e-8 * np.max(np.abs(coef))
        assert abs(coef[n + m]) > 1e-8 * np.max(np.abs(coef))

    def test_construction_failure(self):
        # 1 + alpha - m = 0 and 1 + alpha + beta + n = 0 kill both leading terms
        with pytest.raises(ConstructionFailed):
            special.xm_jacobi(1, 1, 0.0, -2.0, 0.5)


def test_lanczos_matches_math_gamma_on_reals():
    for x in np.linspace(0.6, 30, 40):
        assert special.gamma_complex(x).real == pytest.approx(math.gamma(x), rel=1e-13)
