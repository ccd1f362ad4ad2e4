"""
Comparisons between analytic results and the finite-difference oracle.

Grids here are chosen per check: eigenvalue comparisons for the weakly
bound Scarf II levels need a wider box and a finer step than the default
residual grid, and polynomial fits of eigenvectors need a fine step.
"""

import numpy as np
from numpy.polynomial import chebyshev

from . import potentials as pot
from . import special
from . import solver
from .solver import Grid

EIGEN_GRIDS = {
    pot.Family.GPT: Grid(1e-3, 25.0, 6000),
    pot.Family.SCARF1: Grid(-np.pi / 2 + 1e-3, np.pi / 2 - 1e-3, 6000),
    pot.Family.SCARF2: Grid(-30.0, 30.0, 60001),
}

EOP_GRIDS = {
    pot.Family.GPT: Grid(1e-3, 40.0, 20000),
    pot.Family.SCARF1: Grid(-np.pi / 2 + 1e-3, np.pi / 2 - 1e-3, 20000),
}

RESIDUAL_GRIDS = {
    pot.Family.GPT: Grid(1e-3, 25.0, 6000),
    pot.Family.SCARF1: Grid(-np.pi / 2 + 1e-3, np.pi / 2 - 1e-3, 6000),
    pot.Family.SCARF2: Grid(-12.0, 12.0, 8000),
}

COMPLEX_EXTRA = 6
EOP_MASK = 1e-2


def numeric_levels(spec, p, count=None, grid=None):
    """Oracle eigenvalues of (spec, p).

    Real potentials: with ``count`` None, every eigenvalue below the
    continuum threshold 0 (Sturm count); otherwise the lowest ``count``.
    Scarf II: eigenvalues with negative real part near the bottom of the
    potential (shift-invert), or the lowest ``count`` by real part.
    """
    grid = grid or EIGEN_GRIDS[spec.family]
    hmat = solver.discretize(spec, p, grid)
    if hmat.is_real:
        if count is None:
            count = solver.sturm_count(hmat, 0.0)
        return np.array([e for e, _ in solver.solve_real(hmat, count)])
    want = (count or 0) + COMPLEX_EXTRA + 2 * int(max(abs(p.A), abs(p.B)) + 1)
    sigma = float(np.min(np.real(hmat.diagonal)) + 2.0 * hmat.off) - 1.0
    vals = np.array([e for e, _ in solver.solve_complex(hmat, want, sigma=sigma)])
    if count is None:
        return vals[vals.real < 0.0]
    return vals[:count]


def _scaled(err, ref):
    return err / np.maximum(1.0, np.abs(ref))


def level_mismatch(numeric, analytic):
    """Largest scaled distance from each analytic level to its nearest numeric level.

    The scale is max(1, |E|), so the value compares directly with a 1e-3
    relative-or-absolute tolerance.
    """
    numeric = np.asarray(numeric)
    analytic = np.asarray(analytic, dtype=float)
    if analytic.size == 0:
        return 0.0
    if numeric.size == 0:
        return float("inf")
    d = np.abs(numeric[None, :] - analytic[:, None]).min(axis=1)
    return float(np.max(_scaled(d, analytic)))


def set_distance(numeric, analytic):
    """Symmetric version of :func:`level_mismatch`; also penalizes extra numeric levels."""
    numeric = np.asarray(numeric)
    extra = level_mismatch(analytic, np.real(numeric)) if numeric.size else 0.0
    return max(level_mismatch(numeric, analytic), extra)


def union_spectrum(family, p):
    """Numeric bound set against the merged analytic Direct + Swapped set.

    Returns
    -------
    dict with keys analytic, numeric, distance, count_ok
    """
    spec = pot.PotentialSpec(family, 0, pot.Branch.DIRECT)
    analytic = pot.bound_spectrum(spec, p, pot.Branch.BOTH).energies
    numeric = numeric_levels(spec, p)
    return {
        "analytic": analytic,
        "numeric": numeric,
        "distance": set_distance(numeric, analytic),
        "count_ok": len(numeric) == len(analytic),
    }


def branch_match(spec, p, count=None):
    """Every analytic level on the requested branch matched by an oracle level."""
    analytic = pot.bound_spectrum(spec, p, count_cap=count).energies
    numeric = numeric_levels(spec, p, count=count if spec.family is pot.Family.SCARF1 else None)
    return {"analytic": analytic, "numeric": numeric,
            "mismatch": level_mismatch(numeric, analytic)}


def analytic_residual(spec, p, n, grid=None):
    grid = grid or RESIDUAL_GRIDS[spec.family]
    psi = pot.eval_wavefunction(spec, p, n, grid.x)
    return solver.residual(spec, p, psi, pot.branch_energy(spec, p, n), grid)


def eop_quotient(spec, p, n, grid=None):
    """Oracle eigenvector n divided by prefactor / denominator, as a function of z.

    Returns the z samples and quotient values restricted to the region where
    the eigenvector exceeds ``EOP_MASK`` of its maximum.
    """
    grid = grid or EOP_GRIDS[spec.family]
    hmat = solver.discretize(spec, p, grid)
    _, vec = solver.solve_real(hmat, n + 1)[n]
    x = grid.x
    q = pot.effective_params(spec, p)
    a, b = pot.alpha_beta(spec.family, q)
    z = pot._z(spec.family, x)[0]
    xi = special.jacobi(spec.m, -a - 1.0, b - 1.0, z)
    quotient = vec * xi / pot._prefactor(spec.family, q, x)
    mask = np.abs(vec) > EOP_MASK * np.max(np.abs(vec))
    return np.real(z[mask]), np.real(quotient[mask])


def eop_fit(spec, p, n, grid=None):
    """Relative least-squares residual of a degree n + m polynomial fit of the quotient."""
    z, quo = eop_quotient(spec, p, n, grid)
    coef = chebyshev.chebfit(z, quo, n + spec.m)
    return float(np.linalg.norm(quo - chebyshev.chebval(z, coef)) / np.linalg.norm(quo))


def richardson_ratios(p, levels=3, n_points=6001, x_range=(1e-3, 25.0)):
    """Error ratios |E(h) - E| / |E(h/2) - E| for the lowest GPT Direct levels."""
    spec = pot.PotentialSpec(pot.Family.GPT, 0, pot.Branch.DIRECT)
    exact = pot.bound_spectrum(spec, p, count_cap=levels).energies
    if len(exact) < levels:
        raise ValueError(f"only {len(exact)} bound states at {p}")
    errs = []
    for n in (n_points, 2 * n_points - 1):
        grid = Grid(x_range[0], x_range[1], n)
        vals = np.array([e for e, _ in solver.solve_real(solver.discretize(spec, p, grid), levels)])
        errs.append(np.abs(vals - exact))
    return errs[0] / errs[1]
