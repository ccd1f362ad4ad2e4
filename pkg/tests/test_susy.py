import numpy as np
import pytest

from solvpot import fixtures, solver, susy
from solvpot import potentials as pot
from solvpot.potentials import Branch, Family, ParamSet, PotentialSpec
from solvpot.solver import Grid


def test_gpt_direct_superpotential_hand_formula():
    x = susy.identity_grid(Family.GPT)
    A, B = fixtures.GPT
    w = A / np.tanh(x) - B / np.sinh(x)
    got = pot.eval_superpotential(PotentialSpec(Family.GPT), fixtures.GPT, x)
    assert np.max(np.abs(got - w)) <= 1e-12


def test_gpt_swapped_superpotential_hand_formula():
    x = susy.identity_grid(Family.GPT)
    A, B = fixtures.GPT
    w = (B - 0.5) / np.tanh(x) - (A + 0.5) / np.sinh(x)
    got = pot.eval_superpotential(PotentialSpec(Family.GPT, 0, Branch.SWAPPED), fixtures.GPT, x)
    assert np.max(np.abs(got - w)) <= 1e-12


def test_factorization_gpt_direct():
    rep = susy.check_factorization(PotentialSpec(Family.GPT), fixtures.GPT)
    assert rep.max_rel_deviation <= 1e-10 and rep.passed
    assert rep.claimed_constant == pytest.approx(4.0, abs=1e-10)


def test_factorization_gpt_swapped_m1_numeric_derivative():
    spec = PotentialSpec(Family.GPT, 1, Branch.SWAPPED)
    rep = susy.check_factorization(spec, ParamSet(5, 2), derivative="numeric")
    assert rep.max_rel_deviation <= 1e-8


@pytest.mark.parametrize("family,branch,p", fixtures.CONVENTIONAL)
def test_conventional_identities(family, branch, p):
    spec = PotentialSpec(family, 0, branch)
    assert susy.check_factorization(spec, p).passed
    assert susy.check_partner(spec, p).passed
    rep = susy.check_shape_invariance(spec, p)
    assert rep.passed


@pytest.mark.parametrize("family,branch,p", fixtures.EXTENDED)
def test_extended_identities(family, branch, p):
    spec = PotentialSpec(family, 1, branch)
    assert susy.check_factorization(spec, p).passed
    assert susy.check_partner(spec, p).passed
    rep = susy.check_shape_invariance(spec, p)
    assert rep.passed
    # the shape-invariance constant is E_0(shifted) - E_0
    q = pot.shape_shift(spec, p)
    assert rep.details["expected_constant"] == pytest.approx(
        pot.ground_energy(spec, q) - pot.ground_energy(spec, p), abs=0)


def test_shape_constant_gpt_direct_value():
    rep = susy.check_shape_invariance(PotentialSpec(Family.GPT), fixtures.GPT)
    # E_0(A-1) - E_0(A) = -(1) + 4
    assert rep.details["expected_constant"] == pytest.approx(3.0)
    assert rep.claimed_constant == pytest.approx(3.0, abs=1e-9)


def test_shift_out_of_window_recorded():
    spec = PotentialSpec(Family.GPT)
    rep = susy.check_shape_invariance(spec, ParamSet(0.5, 5))
    assert rep.details["shifted_in_window"] is False
    assert rep.details["window_error"] is not None


class TestIntertwiner:
    grid = Grid(1e-3, 25.0, 6000)

    def test_ground_state_annihilated(self):
        spec = PotentialSpec(Family.GPT)
        psi = pot.eval_wavefunction(spec, fixtures.GPT, 0, self.grid.x)
        _, res = susy.apply_intertwiner("lower", spec, fixtures.GPT, psi, -4.0, self.grid)
        assert res < susy.ANNIHILATION_RATIO

    def test_lowering_maps_to_partner(self):
        spec = PotentialSpec(Family.GPT)
        psi = pot.eval_wavefunction(spec, fixtures.GPT, 1, self.grid.x)
        out, res = susy.apply_intertwiner("lower", spec, fixtures.GPT, psi, -1.0, self.grid)
        assert res <= 1e-4
        shifted = pot.eval_wavefunction(spec, pot.shape_shift(spec, fixtures.GPT), 0, self.grid.x)
        core = slice(10, -10)
        ratio = out[core] / shifted[core]
        big = np.abs(shifted[core]) > 1e-3 * np.max(np.abs(shifted))
        assert np.std(ratio[big]) / abs(np.mean(ratio[big])) <= 1e-3

    def test_raising_scarf1(self):
        spec = PotentialSpec(Family.SCARF1)
        p = fixtures.SCARF1_DIRECT
        grid = Grid(-np.pi / 2 + 1e-3, np.pi / 2 - 1e-3, 6000)
        partner = pot.eval_wavefunction(spec, pot.shape_shift(spec, p), 0, grid.x)
        out, res = susy.apply_intertwiner("raise", spec, p, partner, pot.branch_energy(spec, p, 1), grid)
        assert res <= 1e-4
        assert solver.count_nodes(out) == 1

    def test_zero_in_zero_out(self):
        spec = PotentialSpec(Family.GPT)
        out, res = susy.apply_intertwiner("raise", spec, fixtures.GPT, np.zeros(6000), -1.0, self.grid)
        assert not np.any(out) and res == 0.0
