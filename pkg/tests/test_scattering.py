import mpmath
import numpy as np
import pytest

from solvpot import fixtures, scattering
from solvpot import potentials as pot
from solvpot.errors import PoleAt
from solvpot.potentials import Branch, Family, ParamSet, PotentialSpec

mpmath.mp.dps = 30
G = mpmath.gamma


def s_direct_mp(A, B, k):
    ik = 1j * mpmath.mpf(k)
    return complex(mpmath.power(2, -4 * ik) * G(2 * ik) * G(-A - ik) * G(B + 0.5 - ik)
                   / (G(-2 * ik) * G(-A + ik) * G(B + 0.5 + ik)))


def s_swapped_mp(A, B, k):
    ik = 1j * mpmath.mpf(k)
    return complex(mpmath.power(2, -4 * ik) * G(2 * ik) * G(-B + 0.5 - ik) * G(A - ik + 1)
                   / (G(-2 * ik) * G(-B + 0.5 + ik) * G(A + ik + 1)))


def t_mp(A, B, k):
    ik = 1j * mpmath.mpf(k)
    return complex(G(-A - ik) * G(A + 1 - ik) * G(-B - ik + 0.5) * G(B - ik + 0.5)
                   / (G(-ik) * G(1 - ik) * G(0.5 - ik) ** 2))


def _branch_ab(p, branch):
    return (p.A, p.B) if branch is Branch.DIRECT else (p.B - 0.5, p.A + 0.5)


K = np.array([0.05, 0.3, 0.7, 1.1, 2.5, 4.0, 7.5])


class TestGptSMatrix:
    def test_direct_against_mpmath(self):
        A, B = fixtures.GPT
        s = scattering.gpt_s_matrix(fixtures.GPT, Branch.DIRECT, K)
        ref = np.array([s_direct_mp(A, B, k) for k in K])
        assert np.max(np.abs(s - ref)) <= 1e-12

    def test_swapped_against_mpmath(self):
        A, B = fixtures.GPT
        s = scattering.gpt_s_matrix(fixtures.GPT, Branch.SWAPPED, K)
        ref = np.array([s_swapped_mp(A, B, k) for k in K])
        assert np.max(np.abs(s - ref)) <= 1e-12

    def test_unitarity_example(self):
        s = scattering.gpt_s_matrix(fixtures.GPT, Branch.DIRECT, 0.7)
        assert abs(abs(s) - 1) <= 1e-10

    def test_unitarity_random(self):
        k = np.random.default_rng(5).uniform(0.01, 10, 100)
        for branch in (Branch.DIRECT, Branch.SWAPPED):
            assert np.max(np.abs(np.abs(scattering.gpt_s_matrix(fixtures.GPT, branch, k)) - 1)) <= 1e-10

    def test_footnote_map(self):
        p = fixtures.GPT
        q = ParamSet(-p.B - 0.5, -p.A - 0.5)
        a = scattering.gpt_s_matrix(p, Branch.DIRECT, K)
        b = scattering.gpt_s_matrix(q, Branch.DIRECT, K)
        assert np.max(np.abs(a - b)) <= 1e-10

    def test_pole_raises(self):
        # k = 2i makes -A - ik = 0, a pole of the numerator gamma factor
        with pytest.raises(PoleAt):
            scattering.gpt_s_matrix(ParamSet(2.0, 5.0), Branch.DIRECT, 2j)


class TestExtendedSMatrix:
    def test_m0_reduction(self):
        a = scattering.gpt_s_matrix_xm(fixtures.GPT, 0, K)
        b = scattering.gpt_s_matrix(fixtures.GPT, Branch.SWAPPED, K)
        assert np.max(np.abs(a - b)) <= 1e-14

    def test_m1_example(self):
        s = scattering.gpt_s_matrix_xm(fixtures.GPT, 1, 0.5)
        assert np.isfinite(s) and abs(abs(s) - 1) <= 1e-10

    def test_bracket_unit_modulus(self):
        for m in (1, 2, 3):
            assert np.max(np.abs(np.abs(scattering.xm_bracket(fixtures.GPT, m, K)) - 1)) <= 1e-14


class TestScarf2Amplitudes:
    def test_transmission_against_mpmath(self):
        A, B = fixtures.SCARF2
        t = scattering.scarf2_transmission(fixtures.SCARF2, K)
        ref = np.array([t_mp(A, B, k) for k in K])
        assert np.max(np.abs(t - ref) / np.abs(ref)) <= 1e-12

    def test_transmission_swap_invariance(self):
        p = fixtures.SCARF2
        a = scattering.scarf2_transmission(p, K)
        b = scattering.scarf2_transmission(pot.swap_params(Family.SCARF2, p), K)
        assert np.max(np.abs(a - b)) <= 1e-12

    @pytest.mark.parametrize("p", [ParamSet(3.0, 2.0), ParamSet(2.5, 1.5)])
    def test_reflectionless(self, p):
        # integer A and B, or half-odd A and B, kill both trigonometric terms
        assert np.max(np.abs(scattering.scarf2_reflection(p, K))) <= 1e-12

    def test_integer_a_half_odd_b_reflects(self):
        r = scattering.scarf2_reflection(ParamSet(3.0, 1.5), K[:4])
        assert np.min(np.abs(r)) > 1e-3


class TestPoles:
    def test_gpt_direct(self):
        poles = scattering.find_bound_poles(Family.GPT, fixtures.GPT, Branch.DIRECT)
        assert [q.kappa for q in poles] == pytest.approx([2.0, 1.0], abs=1e-8)
        assert [q.energy for q in poles] == pytest.approx([-4.0, -1.0], abs=1e-8)

    def test_gpt_swapped(self):
        poles = scattering.find_bound_poles(Family.GPT, fixtures.GPT, Branch.SWAPPED)
        assert [q.kappa for q in poles] == pytest.approx([4.5, 3.5, 2.5, 1.5, 0.5], abs=1e-8)

    def test_gpt_both_labels(self):
        poles = scattering.find_bound_poles(Family.GPT, fixtures.GPT)
        assert [q.kappa for q in poles] == pytest.approx([4.5, 3.5, 2.5, 2, 1.5, 1, 0.5], abs=1e-8)
        assert [q.branch.value for q in poles] == ["swapped"] * 3 + ["direct", "swapped", "direct", "swapped"]

    def test_scarf2_both(self):
        poles = scattering.find_bound_poles(Family.SCARF2, fixtures.SCARF2)
        assert [q.kappa for q in poles] == pytest.approx([4, 3, 2.2, 2, 1.2, 1, 0.2], abs=1e-8)

    def test_poles_are_zeros_of_inverse_s(self):
        # independent check: the full 1/S(i kappa) from mpmath vanishes linearly at each pole
        def inv_s(A, B, kap):
            return abs(mpmath.power(2, -4 * kap) * mpmath.rgamma(-2 * kap) * mpmath.rgamma(-A + kap)
                       * mpmath.rgamma(B + 0.5 + kap) * G(2 * kap) * G(-A - kap) * G(B + 0.5 - kap))

        for q in scattering.find_bound_poles(Family.GPT, fixtures.GPT):
            A, B = _branch_ab(fixtures.GPT, q.branch)
            kap = mpmath.mpf(q.kappa)
            near = inv_s(A, B, kap + mpmath.mpf("1e-7"))
            far = inv_s(A, B, kap + mpmath.mpf("0.1"))
            assert near <= 1e-4 * far

    def test_poles_match_analytic_spectra(self):
        for family, p in ((Family.GPT, fixtures.GPT), (Family.SCARF2, fixtures.SCARF2)):
            want = pot.bound_spectrum(PotentialSpec(family), p, Branch.BOTH).energies
            got = sorted(q.energy for q in scattering.find_bound_poles(family, p))
            assert np.max(np.abs(np.array(got) - want)) <= 1e-8

    def test_degenerate_merge(self):
        # B - A - 1/2 = 2 puts kappa = 2, 1 on both branches
        poles = scattering.find_bound_poles(Family.GPT, ParamSet(2.0, 4.5))
        flagged = {round(q.kappa, 6) for q in poles if q.degenerate}
        assert flagged == {2.0, 1.0}

    def test_empty_window(self):
        assert scattering.find_bound_poles(Family.GPT, fixtures.GPT, window=(5.0, 6.0)) == []

    def test_scarf1_rejected(self):
        with pytest.raises(ValueError):
            scattering.find_bound_poles(Family.SCARF1, fixtures.SCARF1_DIRECT)
