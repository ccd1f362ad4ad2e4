"""
s-wave S-matrix of the GPT potential and transmission/reflection of the
PT-symmetric Scarf II potential, with bound-state pole extraction.

Bound states sit at k = i kappa, kappa > 0, E = -kappa^2.
"""

from typing import NamedTuple

import numpy as np
from scipy.optimize import bisect

from . import potentials as pot
from .errors import PoleAt
from .special import gamma_complex, rgamma

POLE_STEP = 0.01


def _gamma_ratio(num, den):
    """prod Gamma(num) / prod Gamma(den); a pole in ``num`` raises PoleAt."""
    out = 1.0 + 0.0j
    for z in num:
        out = out * gamma_complex(z)
    for z in den:
        out = out * rgamma(z)
    return out


def _branch_params(p, branch):
    spec = pot.PotentialSpec(pot.Family.GPT, 0, branch)
    return pot.effective_params(spec, p)


def gpt_s_matrix(p, branch, k):
    """GPT s-wave S-matrix.

    Direct branch:

        S(k) = 2^(-4ik) G(2ik) G(-A-ik) G(B+1/2-ik) / [G(-2ik) G(-A+ik) G(B+1/2+ik)]

    The swapped branch is the same expression at ``(B - 1/2, A + 1/2)``.

    Raises
    ------
    PoleAt
        If k sits on a pole of a numerator gamma factor.
    """
    A, B = _branch_params(p, branch)
    k = np.asarray(k, dtype=complex)
    ik = 1j * k
    try:
        ratio = _gamma_ratio((2 * ik, -A - ik, B + 0.5 - ik),
                             (-2 * ik, -A + ik, B + 0.5 + ik))
    except PoleAt as exc:
        raise PoleAt(complex(k) if k.ndim == 0 else exc.where) from exc
    return 2.0 ** (-4 * ik) * ratio


def xm_bracket(p, m, k):
    """Rational factor multiplying the swapped S-matrix for the X_m extension."""
    A = p.A
    ik = 1j * np.asarray(k, dtype=complex)
    num = (A + 0.5) ** 2 - (ik - 0.5) ** 2 + (A - ik + 1) * (1 - m)
    den = (A + 0.5) ** 2 - (ik + 0.5) ** 2 + (A + ik + 1) * (1 - m)
    if np.any(den == 0):
        raise PoleAt(complex(np.asarray(k).ravel()[0]))
    return num / den


def gpt_s_matrix_xm(p, m, k):
    """S-matrix of the X_m extended GPT potential (swapped form times a bracket).

    At m = 0 the bracket is identically 1.
    """
    s = gpt_s_matrix(p, pot.Branch.SWAPPED, k)
    if m == 0:
        return s
    return s * xm_bracket(p, m, k)


def scarf2_transmission(p, k):
    """t(k) = G(-A-ik) G(A+1-ik) G(-B-ik+1/2) G(B-ik+1/2) / [G(-ik) G(1-ik) G(1/2-ik)^2]."""
    A, B = p
    ik = 1j * np.asarray(k, dtype=complex)
    return _gamma_ratio((-A - ik, A + 1 - ik, -B - ik + 0.5, B - ik + 0.5),
                        (-ik, 1 - ik, 0.5 - ik, 0.5 - ik))


def scarf2_reflection(p, k):
    """r(k) = t(k) [i cos(pi A) sin(pi B) sech(pi k) + i sin(pi A) cos(pi B) csch(pi k)]."""
    A, B = p
    k = np.asarray(k, dtype=complex)
    if np.any(k == 0):
        raise PoleAt(0.0)
    bracket = 1j * (np.cos(np.pi * A) * np.sin(np.pi * B) / np.cosh(np.pi * k)
                    + np.sin(np.pi * A) * np.cos(np.pi * B) / np.sinh(np.pi * k))
    return scarf2_transmission(p, k) * bracket


def scarf2_reciprocal_t(p, kappa):
    """1/t on the positive imaginary axis; real and entire in kappa."""
    A, B = p
    kappa = np.asarray(kappa, dtype=float)
    val = (gamma_complex(kappa) * gamma_complex(1 + kappa) * gamma_complex(0.5 + kappa) ** 2
           * rgamma(kappa - A) * rgamma(A + 1 + kappa)
           * rgamma(kappa - B + 0.5) * rgamma(B + 0.5 + kappa))
    return np.real(val)


class Pole(NamedTuple):
    kappa: float
    energy: float
    branch: pot.Branch
    degenerate: bool = False


def bound_factor(family, p, branch):
    """Reciprocal of the gamma factor whose poles carry a branch's bound states.

    Both families share the form 1/Gamma(kappa - a) with a = A (direct) or
    a = B - 1/2 (swapped). The remaining factors of 1/S or 1/t are nonzero
    for kappa > 0, apart from kinematic zeros of 1/Gamma(2ik) which are not
    bound states.
    """
    spec = pot.PotentialSpec(family, 0, branch)
    a = pot.effective_params(spec, p).A
    return lambda kappa: np.real(rgamma(np.asarray(kappa, dtype=float) - a))


def _scan(f, lo, hi, step, tol):
    n = max(1, int(np.ceil((hi - lo) / step)))
    grid = np.linspace(lo, hi, n + 1)
    vals = f(grid)
    roots = []
    for i in range(n):
        if vals[i] == 0.0:
            roots.append(float(grid[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            roots.append(float(bisect(lambda t: float(f(t)), grid[i], grid[i + 1], xtol=tol)))
    if vals[-1] == 0.0:
        roots.append(float(grid[-1]))
    return roots


def find_bound_poles(family, p, branch=pot.Branch.BOTH, window=None, tol=1e-12):
    """Bound-state poles on k = i kappa, sorted by decreasing kappa.

    Each branch scans the zeros of :func:`bound_factor` by sign-change
    bracketing on a ``POLE_STEP`` grid followed by bisection to ``tol``.
    With ``BOTH`` the branch lists are merged; roots closer than ``10 tol``
    collapse into one entry flagged degenerate.

    Returns
    -------
    list of Pole
        Empty if no sign change is found in the window.
    """
    family = pot.Family(family)
    if family is pot.Family.SCARF1:
        raise ValueError("Scarf I is confining and has no scattering states")
    branch = pot.Branch(branch)
    if window is None:
        window = (1e-6, max(abs(p.A), abs(p.B)) + 2.0)
    lo, hi = window
    if not 0 < lo < hi:
        raise ValueError("kappa window must lie in (0, inf)")
    wanted = [pot.Branch.DIRECT, pot.Branch.SWAPPED] if branch is pot.Branch.BOTH else [branch]
    found = []
    for br in wanted:
        for kappa in _scan(bound_factor(family, p, br), lo, hi, POLE_STEP, tol):
            found.append(Pole(kappa, -kappa**2, br))
    found.sort(key=lambda q: -q.kappa)
    merged = []
    for q in found:
        if merged and abs(merged[-1].kappa - q.kappa) < 10 * tol:
            merged[-1] = merged[-1]._replace(degenerate=True)
        else:
            merged.append(q)
    return merged
