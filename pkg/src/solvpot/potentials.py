"""
Registry of the exactly solvable families and their rational extensions.

Three conventional families are covered, each in a direct and a swapped
solution branch:

* ``GPT``     generalized Poschl-Teller, half line ``0 < x < inf``
* ``SCARF1``  trigonometric Scarf, ``-pi/2 < x < pi/2``
* ``SCARF2``  PT-symmetric complex Scarf II, full line

The swapped branch of parameters ``(A, B)`` is the direct branch of
``swap_params(family, (A, B))``. Every formula below is therefore written
once, for the direct branch, in terms of effective parameters.

An ``m >= 1`` extension adds rational terms built on the denominator
polynomial ``xi_m = P_m^(-alpha-1, beta-1)(z)``; its superpotential is

    W_m = W_0 + d/dx log( xi_m(A, B) / xi_m(shifted A, B) )

and its eigenfunctions are ``prefactor / xi_m * P^_{n+m}(z)``.
"""

import enum
import functools
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import special
from .errors import (
    DomainViolation,
    IndexBeyondSpectrum,
    InvalidWindow,
    SingularDenominator,
)


class Family(str, enum.Enum):
    GPT = "gpt"
    SCARF1 = "scarf1"
    SCARF2 = "scarf2"


class Branch(str, enum.Enum):
    DIRECT = "direct"
    SWAPPED = "swapped"
    BOTH = "both"


DOMAINS = {
    Family.GPT: (0.0, math.inf),
    Family.SCARF1: (-math.pi / 2, math.pi / 2),
    Family.SCARF2: (-math.inf, math.inf),
}

# direction of the shape-invariance shift of the effective A parameter
_SHIFT = {Family.GPT: -1.0, Family.SCARF1: 1.0, Family.SCARF2: -1.0}

DEGENERACY_TOL = 1e-9
DEFAULT_TOWER = 10


@dataclass(frozen=True)
class ParamSet:
    A: float
    B: float

    def __iter__(self):
        return iter((self.A, self.B))


@dataclass(frozen=True)
class PotentialSpec:
    family: Family
    m: int = 0
    branch: Branch = Branch.DIRECT

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "branch", Branch(self.branch))
        if self.branch is Branch.BOTH:
            raise ValueError("a potential belongs to a single branch")
        if self.m < 0:
            raise ValueError("extension order m must be nonnegative")

    def with_branch(self, branch):
        return PotentialSpec(self.family, self.m, branch)


class Level(NamedTuple):
    n: int
    energy: float
    branch: Branch


@dataclass(frozen=True)
class Spectrum:
    """Analytic bound-state energies, sorted ascending."""

    levels: tuple
    n_max: dict
    degenerate: tuple = ()

    @property
    def energies(self):
        return np.array([lv.energy for lv in self.levels])

    def __len__(self):
        return len(self.levels)


@dataclass(frozen=True)
class ValidityReport:
    family: Family
    branch: Branch
    m: int
    in_window: bool
    n_max: Optional[int]
    singular: bool = False
    singular_points: tuple = ()
    superpotential_singular: bool = False
    square_integrable: bool = True
    dirichlet_regular: bool = True
    boundary_exponents: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.in_window and not self.singular


# ---------------------------------------------------------------------------
# parameter maps


def swap_params(family, p):
    """Parameter exchange leaving the conventional potential invariant.

    GPT and Scarf II map ``(A, B) -> (B - 1/2, A + 1/2)``; Scarf I maps
    ``(A, B) -> (B + 1/2, A - 1/2)``. Both maps are involutions.
    """
    family = Family(family)
    A, B = p
    if family is Family.SCARF1:
        return ParamSet(B + 0.5, A - 0.5)
    return ParamSet(B - 0.5, A + 0.5)


def effective_params(spec, p):
    """Direct-branch parameters that reproduce ``(spec, p)``."""
    return p if spec.branch is Branch.DIRECT else swap_params(spec.family, p)


def _from_effective(spec, q):
    return q if spec.branch is Branch.DIRECT else swap_params(spec.family, q)


def shape_shift(spec, p):
    """Parameters under which the partner of ``(spec, p)`` is ``V_1``.

    Direct: ``A -> A - 1`` (GPT, Scarf II) or ``A -> A + 1`` (Scarf I).
    Swapped: the same move on ``B``.
    """
    q = effective_params(spec, p)
    return _from_effective(spec, ParamSet(q.A + _SHIFT[spec.family], q.B))


def alpha_beta(family, q):
    """Jacobi indices for direct-branch parameters ``q``."""
    A, B = q
    if Family(family) is Family.SCARF1:
        return A - B - 0.5, A + B - 0.5
    return B - A - 0.5, -B - A - 0.5


def ground_energy(spec, p):
    q = effective_params(spec, p)
    return q.A**2 if spec.family is Family.SCARF1 else -(q.A**2)


def in_window(family, branch, p):
    family, branch = Family(family), Branch(branch)
    A, B = p
    if family is Family.GPT:
        return B > A + 1 > 1 if branch is Branch.DIRECT else (A > -0.5 and B > 0)
    if family is Family.SCARF1:
        return 0 < B < A - 1 if branch is Branch.DIRECT else B > A - 1 > 0
    return A > B - 0.5 > 0 if branch is Branch.DIRECT else B - 0.5 > 0


def n_max(family, branch, p):
    """Index of the highest bound state, None for an infinite tower, -1 if empty."""
    family = Family(family)
    if family is Family.SCARF1:
        return None
    spec = PotentialSpec(family, 0, branch)
    a = effective_params(spec, p).A
    return math.ceil(a) - 1 if a > 0 else -1


def branch_energy(spec, p, n):
    q = effective_params(spec, p)
    if spec.family is Family.SCARF1:
        return (q.A + n) ** 2
    return -((q.A - n) ** 2)


# ---------------------------------------------------------------------------
# coordinate z(x) and its derivatives


def _check_domain(family, x):
    lo, hi = DOMAINS[family]
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)) or np.any(x <= lo) or np.any(x >= hi):
        raise DomainViolation(f"{family.value} is defined on ({lo}, {hi})")
    return x


def _z(family, x):
    if family is Family.GPT:
        return np.cosh(x), np.sinh(x), np.cosh(x)
    if family is Family.SCARF1:
        return np.sin(x), np.cos(x), -np.sin(x)
    return 1j * np.sinh(x), 1j * np.cosh(x), 1j * np.sinh(x)


def _one_minus_z_sq(family, x):
    # 1 - z^2 without cancellation
    if family is Family.GPT:
        return -np.sinh(x) ** 2
    if family is Family.SCARF1:
        return np.cos(x) ** 2
    return np.cosh(x) ** 2


def _xi_indices(family, q, shifted=False):
    a, b = alpha_beta(family, q)
    if shifted:
        a, b = a + 1.0, b + 1.0
    return -a - 1.0, b - 1.0


# ---------------------------------------------------------------------------
# conventional pieces, direct branch, effective parameters


def _conventional(family, q, x):
    A, B = q
    if family is Family.GPT:
        cs = 1.0 / np.sinh(x)
        return (B**2 + A * (A + 1)) * cs**2 - B * (2 * A + 1) * cs / np.tanh(x)
    if family is Family.SCARF1:
        sc = 1.0 / np.cos(x)
        return (B**2 + A * (A - 1)) * sc**2 - B * (2 * A - 1) * sc * np.tan(x)
    sh = 1.0 / np.cosh(x)
    return -(B**2 + A * (A + 1)) * sh**2 + 1j * B * (2 * A + 1) * sh * np.tanh(x)


def _w0(family, q, x):
    A, B = q
    if family is Family.GPT:
        cs = 1.0 / np.sinh(x)
        ct = 1.0 / np.tanh(x)
        return A * ct - B * cs, -A * cs**2 + B * cs * ct
    if family is Family.SCARF1:
        sc = 1.0 / np.cos(x)
        t = np.tan(x)
        return A * t - B * sc, A * sc**2 - B * sc * t
    sh = 1.0 / np.cosh(x)
    t = np.tanh(x)
    return A * t + 1j * B * sh, A * sh**2 - 1j * B * sh * t


def _x1_terms(family, q, x):
    # closed-form X_1 rational terms
    A, B = q
    if family is Family.GPT:
        d = 2 * B * np.cosh(x) - 2 * A - 1
        return 2 * (2 * A + 1) / d - 2 * (4 * B**2 - (2 * A + 1) ** 2) / d**2
    if family is Family.SCARF1:
        d = 2 * A - 1 - 2 * B * np.sin(x)
        return 2 * (2 * A - 1) / d - 2 * ((2 * A - 1) ** 2 - 4 * B**2) / d**2
    d = -2j * B * np.sinh(x) + 2 * A + 1
    return -2 * (2 * A + 1) / d + 2 * ((2 * A + 1) ** 2 - 4 * B**2) / d**2


def _xm_terms(family, q, m, x):
    # K + L(z) r + M (1 - z^2) r^2 with r = P_{m-1}^(-a,b) / P_m^(-a-1,b-1)
    a, b = alpha_beta(family, q)
    z, _, _ = _z(family, x)
    r = special.jacobi(m - 1, -a, b, z) / special.jacobi(m, -a - 1.0, b - 1.0, z)
    s = 1.0 if family is Family.SCARF1 else -1.0
    c = a - b - m + 1.0
    return s * (-2.0 * m * c
                - c * (a + b + (a - b + 1.0) * z) * r
                + 0.5 * c**2 * _one_minus_z_sq(family, x) * r**2)


def _log_xi_derivatives(family, q, m, x, shifted=False):
    """First and second x-derivatives of log xi_m(z(x))."""
    a, b = _xi_indices(family, q, shifted)
    z, dz, d2z = _z(family, x)
    p = special.jacobi(m, a, b, z)
    p1 = special.jacobi_derivative(m, a, b, z)
    p2 = special.jacobi_derivative(m, a, b, z, order=2)
    g = p1 / p
    return dz * g, d2z * g + dz**2 * (p2 / p - g**2)


def _finish(family, value):
    return np.real(value) if family is not Family.SCARF2 else np.asarray(value, dtype=complex)


# ---------------------------------------------------------------------------
# validity screening


def _xi_roots_x(family, q, m, shifted=False):
    """x-locations in the domain where xi_m vanishes."""
    if m == 0:
        return ()
    a, b = _xi_indices(family, q, shifted)
    poly = special.jacobi_coefficients(m, a, b)
    roots = poly.roots()
    scale = max(1.0, float(np.max(np.abs(roots)))) if len(roots) else 1.0
    tol = 1e-9 * scale
    out = []
    for r in np.atleast_1d(roots):
        if family is Family.GPT and abs(r.imag) < tol and r.real > 1.0:
            out.append(float(np.arccosh(r.real)))
        elif family is Family.SCARF1 and abs(r.imag) < tol and -1.0 < r.real < 1.0:
            out.append(float(np.arcsin(r.real)))
        elif family is Family.SCARF2 and abs(r.real) < tol:
            out.append(float(np.arcsinh(r.imag)))
    return tuple(sorted(out))


def _probe_points(family):
    # (label, distance-to-boundary sequence, x(d), kind)
    lo, hi = DOMAINS[family]
    ds = np.array([1e-3, 1e-4, 1e-5])
    far = np.array([10.0, 20.0, 30.0])
    if family is Family.GPT:
        return [("left", ds, ds, "finite"), ("right", far, far, "infinite")]
    if family is Family.SCARF1:
        return [("left", ds, lo + ds, "finite"), ("right", ds, hi - ds, "finite")]
    return [("left", far, -far, "infinite"), ("right", far, far, "infinite")]


def _boundary_exponents(spec, p):
    """Local behaviour of the branch ground state at each boundary.

    Finite ends: exponent e of psi ~ d^e. Infinite ends: rate c of
    psi ~ exp(c |x|). Estimated from log-slopes of the analytic psi_0.
    """
    out = {}
    for label, d, xs, kind in _probe_points(spec.family):
        with np.errstate(all="ignore"):
            vals = np.abs(_wavefunction_unchecked(spec, p, 0, xs))
            logs = np.log(vals)
        if kind == "finite":
            slope = np.diff(logs) / np.diff(np.log(d))
        else:
            slope = np.diff(logs) / np.diff(d)
        out[label] = (kind, float(slope[-1]))
    return out


@functools.lru_cache(maxsize=512)
def validate(spec, p):
    """Window membership, denominator screening and n_max for ``(spec, p)``."""
    q = effective_params(spec, p)
    fam = spec.family
    roots = _xi_roots_x(fam, q, spec.m)
    shifted_roots = _xi_roots_x(fam, q, spec.m, shifted=True)
    report = dict(
        family=fam,
        branch=spec.branch,
        m=spec.m,
        in_window=in_window(fam, spec.branch, p),
        n_max=n_max(fam, spec.branch, p),
        singular=bool(roots),
        singular_points=roots,
        superpotential_singular=bool(roots or shifted_roots),
    )
    if not roots:
        exps = _boundary_exponents(spec, p)
        l2, regular = True, True
        for kind, e in exps.values():
            if kind == "finite":
                l2 &= e > -0.5
                regular &= e > 0.0
            else:
                l2 &= e < 0.0
                regular &= e < 0.0
        report.update(square_integrable=bool(l2), dirichlet_regular=bool(regular),
                      boundary_exponents=exps)
    else:
        report.update(square_integrable=False, dirichlet_regular=False)
    return ValidityReport(**report)


def _require_regular(spec, p):
    if spec.m and validate(spec, p).singular:
        raise SingularDenominator(
            f"{spec.family.value} m={spec.m} {spec.branch.value}: denominator vanishes at "
            f"x = {validate(spec, p).singular_points}")


# ---------------------------------------------------------------------------
# evaluation


def eval_potential(spec, p, x):
    """Potential V_1(x). Real array for GPT / Scarf I, complex for Scarf II."""
    x = _check_domain(spec.family, x)
    _require_regular(spec, p)
    q = effective_params(spec, p)
    v = _conventional(spec.family, q, x)
    if spec.m == 1:
        v = v + _x1_terms(spec.family, q, x)
    elif spec.m > 1:
        v = v + _xm_terms(spec.family, q, spec.m, x)
    return _finish(spec.family, v)


def eval_potential_xm_form(spec, p, x):
    """Extended potential from the general X_m closed form (valid for m = 1 too)."""
    x = _check_domain(spec.family, x)
    _require_regular(spec, p)
    q = effective_params(spec, p)
    v = _conventional(spec.family, q, x)
    if spec.m:
        v = v + _xm_terms(spec.family, q, spec.m, x)
    return _finish(spec.family, v)


def superpotential_and_derivative(spec, p, x):
    """W(x) and dW/dx, both analytic."""
    x = _check_domain(spec.family, x)
    _require_regular(spec, p)
    q = effective_params(spec, p)
    w, dw = _w0(spec.family, q, x)
    if spec.m:
        g, dg = _log_xi_derivatives(spec.family, q, spec.m, x)
        gs, dgs = _log_xi_derivatives(spec.family, q, spec.m, x, shifted=True)
        w = w + g - gs
        dw = dw + dg - dgs
    return _finish(spec.family, w), _finish(spec.family, dw)


def eval_superpotential(spec, p, x):
    return superpotential_and_derivative(spec, p, x)[0]


def eval_partner(spec, p, x):
    """Partner potential W^2 + W' + E_0, the offset matching V_1 = W^2 - W' + E_0."""
    w, dw = superpotential_and_derivative(spec, p, x)
    return w**2 + dw + ground_energy(spec, p)


def _prefactor(family, q, x):
    A, B = q
    a, b = alpha_beta(family, q)
    if family is Family.GPT:
        # z - 1 = 2 sinh^2(x/2), z + 1 = 2 cosh^2(x/2)
        zm1 = 2.0 * np.sinh(x / 2) ** 2
        zp1 = 2.0 * np.cosh(x / 2) ** 2
        return zm1 ** ((a + 0.5) / 2) * zp1 ** ((b + 0.5) / 2)
    if family is Family.SCARF1:
        om = 2.0 * np.sin(np.pi / 4 - x / 2) ** 2
        op = 2.0 * np.cos(np.pi / 4 - x / 2) ** 2
        return om ** ((a + 0.5) / 2) * op ** ((b + 0.5) / 2)
    return np.cosh(x) ** (-A) * np.exp(-1j * B * np.arctan(np.sinh(x)))


def _wavefunction_unchecked(spec, p, n, x):
    fam = spec.family
    q = effective_params(spec, p)
    a, b = alpha_beta(fam, q)
    z, _, _ = _z(fam, x)
    pre = _prefactor(fam, q, x)
    if spec.m == 0:
        return _finish(fam, pre * special.jacobi(n, a, b, z))
    xi = special.jacobi(spec.m, -a - 1.0, b - 1.0, z)
    return _finish(fam, pre / xi * special.xm_jacobi(n, spec.m, a, b, z))


def eval_wavefunction(spec, p, n, x):
    """Unnormalized analytic eigenfunction psi_n(x) of ``(spec, p)``."""
    x = _check_domain(spec.family, x)
    _require_regular(spec, p)
    top = n_max(spec.family, spec.branch, p)
    if n < 0 or (top is not None and n > top):
        raise IndexBeyondSpectrum(f"n={n} outside 0..{top}")
    return _wavefunction_unchecked(spec, p, n, x)


def bound_spectrum(spec, p, selector=None, count_cap=None):
    """Analytic bound-state energies.

    Parameters
    ----------
    spec : PotentialSpec
        Family and extension order; its branch is the default selector.
    p : ParamSet
    selector : Branch, optional
        ``DIRECT``, ``SWAPPED`` or ``BOTH``. ``BOTH`` merges the branches
        whose window passes and never fails on a single branch.
    count_cap : int, optional
        Maximum number of levels per branch. Infinite towers (Scarf I)
        default to ``DEFAULT_TOWER``.

    Returns
    -------
    Spectrum
    """
    selector = Branch(selector) if selector is not None else spec.branch
    if selector is Branch.BOTH:
        branches = [b for b in (Branch.DIRECT, Branch.SWAPPED) if in_window(spec.family, b, p)]
        if not branches:
            raise InvalidWindow(Branch.BOTH)
    else:
        if not in_window(spec.family, selector, p):
            raise InvalidWindow(selector)
        branches = [selector]
    levels, tops = [], {}
    for br in branches:
        sub = spec.with_branch(br)
        if spec.m and selector is not Branch.BOTH:
            _require_regular(sub, p)
        top = n_max(spec.family, br, p)
        tops[br] = top
        count = top + 1 if top is not None else DEFAULT_TOWER
        if count_cap is not None:
            count = min(count, count_cap)
        levels.extend(Level(n, branch_energy(sub, p, n), br) for n in range(count))
    levels.sort(key=lambda lv: (lv.energy, lv.branch.value))
    degenerate = tuple(
        (i, i + 1) for i in range(len(levels) - 1)
        if levels[i].branch is not levels[i + 1].branch
        and abs(levels[i + 1].energy - levels[i].energy) < DEGENERACY_TOL
    )
    return Spectrum(tuple(levels), tops, degenerate)
