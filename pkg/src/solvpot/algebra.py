"""
Potential-algebra realizations of the extended so(2,1), sl(2,C) and
iso(2,1) algebras.

A realization is the triple (F, G, U) at a J_3 eigenvalue k. GPT uses
so(2,1), Scarf II uses sl(2,C) and Scarf I uses iso(2,1). For a family in
effective direct parameters (A', B'), the realization trades A' for k and
keeps the other coupling g = B' fixed:

    so21 / sl2c:  A' = k - 1/2        iso21:  A' = k + 1/2

U(x, kappa) is the logarithmic-derivative difference of the X_m
denominators at effective parameters (kappa, g), so the Casimir potential
at k reproduces the registry potential at (k -/+ 1/2, g).
"""

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import potentials as pot
from . import special
from .errors import EmptySpectrum, SingularDenominator
from .susy import identity_grid

DEFAULT_TOWER = pot.DEFAULT_TOWER


class Kind(str, enum.Enum):
    SO21 = "so21"
    SL2C = "sl2c"
    ISO21 = "iso21"


KIND_OF = {
    pot.Family.GPT: Kind.SO21,
    pot.Family.SCARF2: Kind.SL2C,
    pot.Family.SCARF1: Kind.ISO21,
}


class ConstraintResidual(NamedTuple):
    which: str
    max_abs: float
    grid: tuple


@dataclass(frozen=True)
class AlgebraRealization:
    """(F, G, U_m) data of one realization.

    Attributes
    ----------
    family, branch, m
        Registry potential being realized.
    g : float
        The coupling that stays fixed (the one not traded for k).
    k : float
        J_3 eigenvalue.
    """

    family: pot.Family
    branch: pot.Branch
    m: int
    g: float
    k: float

    @property
    def kind(self):
        return KIND_OF[self.family]

    @property
    def _offset(self):
        # A' = k + offset
        return 0.5 if self.kind is Kind.ISO21 else -0.5

    def j(self, n):
        """Casimir label of level n (k = -j + n, or j = k + n for iso21)."""
        return self.k + n if self.kind is Kind.ISO21 else n - self.k

    def registry(self):
        """(PotentialSpec, ParamSet) reproduced by this realization."""
        spec = pot.PotentialSpec(self.family, self.m, self.branch)
        eff = pot.ParamSet(self.k + self._offset, self.g)
        if self.branch is pot.Branch.DIRECT:
            return spec, eff
        return spec, pot.swap_params(self.family, eff)

    def eval_F(self, x):
        x = np.asarray(x, dtype=float)
        if self.family is pot.Family.GPT:
            return 1.0 / np.tanh(x), -1.0 / np.sinh(x) ** 2
        if self.family is pot.Family.SCARF1:
            return np.tan(x), 1.0 / np.cos(x) ** 2
        return np.tanh(x), 1.0 / np.cosh(x) ** 2

    def eval_G(self, x):
        """G and dG/dx.

        Scarf II uses G = -i g sech x. With the opposite sign the m >= 1
        constraint and the Casimir match both fail, see the module tests.
        """
        x = np.asarray(x, dtype=float)
        g = self.g
        if self.family is pot.Family.GPT:
            cs = 1.0 / np.sinh(x)
            return g * cs, -g * cs / np.tanh(x)
        if self.family is pot.Family.SCARF1:
            sc = 1.0 / np.cos(x)
            return g * sc, g * sc * np.tan(x)
        sh = 1.0 / np.cosh(x)
        return -1j * g * sh, 1j * g * sh * np.tanh(x)

    def eval_U(self, x, kappa):
        """U(x, kappa) and its x-derivative; both vanish for m = 0."""
        x = np.asarray(x, dtype=float)
        if self.m == 0:
            z = np.zeros_like(x)
            return z, z
        q = pot.ParamSet(kappa, self.g)
        for shifted in (False, True):
            if pot._xi_roots_x(self.family, q, self.m, shifted=shifted):
                raise SingularDenominator(f"U denominator vanishes for kappa={kappa}")
        g0, d0 = pot._log_xi_derivatives(self.family, q, self.m, x)
        g1, d1 = pot._log_xi_derivatives(self.family, q, self.m, x, shifted=True)
        return g0 - g1, d0 - d1


def realize(family, branch, m, p):
    """Realization reproducing the registry potential ``(family, m, branch)`` at ``p``."""
    spec = pot.PotentialSpec(family, m, branch)
    eff = pot.effective_params(spec, p)
    offset = 0.5 if KIND_OF[spec.family] is Kind.ISO21 else -0.5
    return AlgebraRealization(spec.family, spec.branch, m, eff.B, eff.A - offset)


def _grid_desc(x):
    return (float(x[0]), float(x[-1]), len(x))


def check_constraints(r, x=None, literal=False):
    """Residuals of the kind-appropriate constraint equations.

    so21 / sl2c::

        F' + F^2 - 1 = 0,   G' + F G = 0
        [U^2 - U' + 2U(F(k-1/2) - G)]_{k-1/2} - [U^2 + U' + 2U(F(k+1/2) - G)]_{k+1/2} = 0

    iso21::

        F' - F^2 - 1 = 0,   G' - F G = 0
        [U^2 - U' + 2U(F(k+1/2) - G)]_{k+1/2} - [U^2 + U' + 2U(F(k-1/2) - G)]_{k-1/2} = 0

    In the iso21 U condition the second bracket carries F (k - 1/2); with
    ``literal=True`` it uses F (k + 1/2) instead, which fails for m >= 1.
    """
    x = identity_grid(r.family) if x is None else np.asarray(x, dtype=float)
    F, dF = r.eval_F(x)
    G, dG = r.eval_G(x)
    k = r.k
    up, dup = r.eval_U(x, k + 0.5)
    um, dum = r.eval_U(x, k - 0.5)
    if r.kind is Kind.ISO21:
        first = dF - F**2 - 1.0
        second = dG - F * G
        c2 = (k + 0.5) if literal else (k - 0.5)
        u_cond = ((up**2 - dup + 2 * up * (F * (k + 0.5) - G))
                  - (um**2 + dum + 2 * um * (F * c2 - G)))
    else:
        first = dF + F**2 - 1.0
        second = dG + F * G
        u_cond = ((um**2 - dum + 2 * um * (F * (k - 0.5) - G))
                  - (up**2 + dup + 2 * up * (F * (k + 0.5) - G)))
    desc = _grid_desc(x)
    return [
        ConstraintResidual("FG_first", float(np.max(np.abs(first))), desc),
        ConstraintResidual("FG_second", float(np.max(np.abs(second))), desc),
        ConstraintResidual("U_condition", float(np.max(np.abs(u_cond))), desc),
    ]


def casimir_potential(r, x):
    """k-dependent potential read off the Casimir operator.

    so21 / sl2c, with U = U(x, k - 1/2)::

        V_k = (F^2 - 1)(k^2 - 1/4) + 2k G' + G^2 + U^2 + 2((k - 1/2)F - G)U - U'

    iso21, with U = U(x, k + 1/2)::

        V_k = (1 + F^2)(k^2 - 1/4) - 2k G' + G^2 + U^2 + 2((k + 1/2)F - G)U - U'
    """
    x = np.asarray(x, dtype=float)
    F, _ = r.eval_F(x)
    G, dG = r.eval_G(x)
    k = r.k
    if r.kind is Kind.ISO21:
        u, du = r.eval_U(x, k + 0.5)
        v = (1 + F**2) * (k**2 - 0.25) - 2 * k * dG + G**2 + u**2 + 2 * ((k + 0.5) * F - G) * u - du
    else:
        u, du = r.eval_U(x, k - 0.5)
        v = (F**2 - 1) * (k**2 - 0.25) + 2 * k * dG + G**2 + u**2 + 2 * ((k - 0.5) * F - G) * u - du
    return v if r.kind is Kind.SL2C else np.real(v)


def algebra_spectrum(r, count_cap: Optional[int] = None):
    """Energies from the discrete series.

    so21 / sl2c: E_n = -(n - (k - 1/2))^2 for 0 <= n < k - 1/2.
    iso21: E_n = (k + 1/2 + n)^2, i.e. (j + 1/2)^2 with j = k + n.
    """
    if r.kind is Kind.ISO21:
        count = DEFAULT_TOWER if count_cap is None else count_cap
        energies = [(r.k + 0.5 + n) ** 2 for n in range(count)]
        top = None
    else:
        top = int(np.ceil(r.k - 0.5)) - 1
        if top < 0:
            raise EmptySpectrum(f"k={r.k} admits no bound state")
        count = top + 1 if count_cap is None else min(top + 1, count_cap)
        energies = [-((n - (r.k - 0.5)) ** 2) for n in range(count)]
    levels = tuple(pot.Level(n, e, r.branch) for n, e in enumerate(energies))
    return pot.Spectrum(tuple(sorted(levels, key=lambda lv: lv.energy)), {r.branch: top})


# ---------------------------------------------------------------------------
# literal closed forms of U, kept as independent cross-checks


def printed_u_x1(r, x, kappa):
    """Closed-form X_1 U(x, kappa) for the realizations that have one.

    Available for GPT swapped, Scarf II swapped and both Scarf I branches;
    ``kappa`` is k - 1/2 for so21 / sl2c and k + 1/2 for iso21.
    """
    x = np.asarray(x, dtype=float)
    fam, br = r.family, r.branch
    if fam is pot.Family.GPT and br is pot.Branch.SWAPPED:
        c = 2 * r.g  # 2A + 1 with g = A + 1/2
        return (c * np.sinh(x) / (c * np.cosh(x) - 2 * kappa - 1)
                - c * np.sinh(x) / (c * np.cosh(x) - 2 * kappa + 1))
    if fam is pot.Family.SCARF2 and br is pot.Branch.SWAPPED:
        c = 2j * r.g  # 2i(A + 1/2)
        return (c * np.cosh(x) / (-c * np.sinh(x) + 2 * kappa - 1)
                - c * np.cosh(x) / (-c * np.sinh(x) + 2 * kappa + 1))
    if fam is pot.Family.SCARF1 and br is pot.Branch.DIRECT:
        b = r.g
        return (-2 * b * np.cos(x) / (-2 * b * np.sin(x) + 2 * kappa - 1)
                + 2 * b * np.cos(x) / (-2 * b * np.sin(x) + 2 * kappa + 1))
    if fam is pot.Family.SCARF1 and br is pot.Branch.SWAPPED:
        c = 2 * r.g  # 2A - 1 with g = A - 1/2
        return (c * np.cos(x) / (2 * kappa + 1 - c * np.sin(x))
                - c * np.cos(x) / (2 * kappa - 1 - c * np.sin(x)))
    raise NotImplementedError(f"no closed X_1 form for {fam.value} {br.value}")


def printed_u_xm(r, x, kappa, prefactor="A"):
    """Jacobi-ratio form of U(x, m, kappa) for the swapped GPT and Scarf II realizations.

    ``prefactor`` selects the reading of the leading constant: ``"A"`` uses
    (m - 2A - 2), ``"B"`` uses (m - 2B - 2) with B the traded coupling k.
    """
    x = np.asarray(x, dtype=float)
    if r.branch is not pot.Branch.SWAPPED or r.family is pot.Family.SCARF1:
        raise NotImplementedError("defined for the swapped GPT and Scarf II realizations")
    m, A = r.m, r.g - 0.5
    if m == 0:
        return np.zeros_like(x)
    lead = (m - 2 * A - 2) if prefactor == "A" else (m - 2 * r.k - 2)
    if r.family is pot.Family.GPT:
        z, dz = np.cosh(x), np.sinh(x)
    else:
        z, dz = 1j * np.sinh(x), 1j * np.cosh(x)
    j = special.jacobi
    first = j(m - 1, kappa - A, -kappa - A - 1, z) / j(m, kappa - A - 1, -kappa - A - 2, z)
    second = j(m - 1, kappa - A - 1, -kappa - A, z) / j(m, kappa - A - 2, -kappa - A - 1, z)
    return lead * dz / 2 * (first - second)
