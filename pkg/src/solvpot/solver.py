"""
Finite-difference oracle for H = -d^2/dx^2 + V(x).

Three-point Laplacian on a uniform grid with Dirichlet conditions at both
ends: unknowns live on the interior nodes, the end nodes are pinned to 0.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.sparse import diags
from scipy.sparse.linalg import ArpackNoConvergence, eigs

from . import potentials as pot
from .errors import ConvergenceFailure, DomainViolation, GridMismatch, ZeroFunction

BOUNDARY_MARGIN = 2
NODE_ZERO_TOL = 1e-12

# solver grids used by the numeric checks
DEFAULT_GRIDS = {
    pot.Family.GPT: (1e-3, 25.0, 6000),
    pot.Family.SCARF1: (-np.pi / 2 + 1e-3, np.pi / 2 - 1e-3, 6000),
    pot.Family.SCARF2: (-12.0, 12.0, 8000),
}


@dataclass(frozen=True)
class Grid:
    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 3:
            raise ValueError("a grid needs at least 3 points")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")

    @property
    def h(self):
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def x(self):
        return np.linspace(self.x_min, self.x_max, self.n_points)

    @property
    def interior(self):
        return self.x[1:-1]

    @classmethod
    def default(cls, family, n_points=None):
        lo, hi, n = DEFAULT_GRIDS[pot.Family(family)]
        return cls(lo, hi, n_points or n)


@dataclass(frozen=True)
class DiscreteHamiltonian:
    """Tridiagonal operator on the interior nodes of ``grid``.

    ``diagonal`` holds 2/h^2 + V(x_i); every off-diagonal entry is -1/h^2.
    """

    diagonal: np.ndarray
    off: float
    grid: Grid

    @property
    def is_real(self):
        return not np.iscomplexobj(self.diagonal)

    def sparse(self):
        n = len(self.diagonal)
        return diags([np.full(n - 1, self.off), self.diagonal, np.full(n - 1, self.off)],
                     [-1, 0, 1], format="csc")


def discretize_values(v_interior, grid):
    """Assemble H from potential samples at the interior nodes."""
    v = np.asarray(v_interior)
    if v.shape != (grid.n_points - 2,):
        raise GridMismatch("potential must be sampled on the interior nodes")
    h2 = grid.h**2
    return DiscreteHamiltonian(2.0 / h2 + v, -1.0 / h2, grid)


def discretize(spec, p, grid):
    lo, hi = pot.DOMAINS[spec.family]
    if not (grid.x_min > lo and grid.x_max < hi):
        raise DomainViolation("grid must lie strictly inside the domain")
    return discretize_values(pot.eval_potential(spec, p, grid.interior), grid)


def sturm_count(hmat, shift):
    """Number of eigenvalues of a real tridiagonal H strictly below ``shift``.

    Counts negative pivots of the LDL^T factorization of H - shift.
    """
    if not hmat.is_real:
        raise TypeError("Sturm counting needs a real symmetric matrix")
    e2 = hmat.off**2
    tiny = np.finfo(float).tiny
    count = 0
    q = 1.0
    first = True
    for d in hmat.diagonal:
        q = d - shift if first else d - shift - e2 / q
        first = False
        if q == 0.0:
            q = -tiny
        if q < 0.0:
            count += 1
    return count


def _pad(vec):
    return np.concatenate(([0.0], vec, [0.0]))


def solve_real(hmat, count):
    """Lowest ``count`` eigenpairs of a real tridiagonal H.

    Bisection and inverse iteration (LAPACK ``stebz``/``stein`` via
    :func:`scipy.linalg.eigh_tridiagonal`). Eigenvectors are returned on the
    full grid with the Dirichlet zeros at both ends.

    Returns
    -------
    list of (float, ndarray)
    """
    if not hmat.is_real:
        raise TypeError("solve_real needs a real diagonal; use solve_complex")
    n = len(hmat.diagonal)
    count = min(count, n)
    if count <= 0:
        return []
    off = np.full(n - 1, hmat.off)
    try:
        w, v = eigh_tridiagonal(hmat.diagonal, off, select="i",
                                select_range=(0, count - 1), lapack_driver="stebz")
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc), {"n": n, "count": count}) from exc
    if not (np.all(np.isfinite(w)) and np.all(np.isfinite(v))):
        raise ConvergenceFailure("non-finite eigenpairs", {"n": n, "count": count})
    # bisection is accurate to a few ulps of ||H||
    scale = np.max(np.abs(hmat.diagonal)) + 2.0 * abs(hmat.off)
    below = sturm_count(hmat, w[-1] + 64 * np.finfo(float).eps * scale)
    if below < count:
        raise ConvergenceFailure("Sturm count disagrees with eigenvalues",
                                 {"sturm": below, "count": count})
    return [(float(w[i]), _pad(v[:, i])) for i in range(count)]


def solve_complex(hmat, count, sigma=None):
    """Eigenpairs of a complex tridiagonal H closest to ``sigma``.

    Shift-invert Arnoldi (ARPACK). Intended for PT-symmetric potentials
    with a real spectrum; results are sorted by real part.
    """
    n = len(hmat.diagonal)
    if sigma is None:
        sigma = float(np.min(np.real(hmat.diagonal))) + 2.0 * hmat.off
    k = min(count, n - 2)
    try:
        w, v = eigs(hmat.sparse().astype(complex), k=k, sigma=sigma, which="LM")
    except ArpackNoConvergence as exc:
        raise ConvergenceFailure("ARPACK did not converge",
                                 {"converged": len(exc.eigenvalues), "k": k}) from exc
    order = np.argsort(w.real)
    return [(complex(w[i]), _pad(v[:, i])) for i in order]


def _apply(spec, p, psi, grid):
    """(H psi) at the interior nodes using the analytic potential."""
    h2 = grid.h**2
    v = pot.eval_potential(spec, p, grid.interior)
    return (-(psi[2:] - 2.0 * psi[1:-1] + psi[:-2]) / h2) + v * psi[1:-1]


def residual(spec, p, psi, E, grid):
    """Relative residual ||(H - E) psi|| / ||psi|| away from the boundaries."""
    psi = np.asarray(psi)
    if psi.shape != (grid.n_points,):
        raise GridMismatch("psi must be sampled on every grid node")
    m = BOUNDARY_MARGIN
    core = psi[m:-m]
    norm = np.linalg.norm(core)
    if norm == 0.0:
        raise ZeroFunction("psi vanishes on the grid")
    r = _apply(spec, p, psi, grid) - E * psi[1:-1]
    return float(np.linalg.norm(r[m - 1:len(r) - (m - 1)]) / norm)


def count_nodes(psi):
    """Strict sign changes, skipping near-zero samples and the boundary margin."""
    psi = np.asarray(psi)
    if np.iscomplexobj(psi):
        raise TypeError("node counting needs real samples")
    core = psi[BOUNDARY_MARGIN:-BOUNDARY_MARGIN]
    scale = np.max(np.abs(core)) if core.size else 0.0
    if scale == 0.0:
        return 0
    signs = np.sign(core[np.abs(core) >= NODE_ZERO_TOL * scale])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def inner_product(psi_a, psi_b, grid):
    """Trapezoidal integral of conj(psi_a) psi_b."""
    a, b = np.asarray(psi_a), np.asarray(psi_b)
    if a.shape != b.shape or a.shape != (grid.n_points,):
        raise GridMismatch("both functions must be sampled on the same grid")
    return complex(np.trapezoid(np.conj(a) * b, dx=grid.h))
