"""
Tolerance ladder shared by the test suite and ``solvpot verify``.

Every entry can be overridden with an environment variable named
``SOLVPOT_TOL_<KEY>`` (upper case), e.g. ``SOLVPOT_TOL_SWAP=1e-11``.

===================  =======  ==============================================
key                  value    checks
===================  =======  ==============================================
swap                 1e-12    m=0 potential at p vs swap(p)
partner_m0           1e-12    partner == shifted potential, m = 0
partner_xm           1e-10    partner == shifted potential, m >= 1
factorization        1e-9     W^2 - W' - V + E_0 (scaled by 1 + |V|)
shape_constant       1e-9     shape-invariance remainder vs E_0 difference
pt_symmetry          1e-12    conj V(x) == V(-x)
unitarity            1e-10    |S(k)| = 1 for real k
pole                 1e-8     S-matrix poles vs analytic kappa
sctm_reduction       1e-14    extended S at m = 0 vs swapped S
t_swap               1e-12    Scarf II transmission swap invariance
footnote             1e-10    GPT S under (A, B) -> (-B-1/2, -A-1/2)
constraint           1e-9     algebra constraint residuals
casimir              1e-9     Casimir potential vs registry potential
spectrum_rel         1e-3     oracle eigenvalue vs analytic (relative)
spectrum_abs         1e-3     same, absolute, used when |E| < 1
residual             1e-4     analytic psi against the discrete H
eop_fit              1e-6     polynomial fit of oracle eigenvector quotients
richardson_lo        3.0      lower bound of the error ratio under h -> h/2
richardson_hi        5.0      upper bound of that ratio
===================  =======  ==============================================
"""

import os

ENV_PREFIX = "SOLVPOT_TOL_"

_DEFAULTS = {
    "swap": 1e-12,
    "partner_m0": 1e-12,
    "partner_xm": 1e-10,
    "factorization": 1e-9,
    "shape_constant": 1e-9,
    "pt_symmetry": 1e-12,
    "unitarity": 1e-10,
    "pole": 1e-8,
    "sctm_reduction": 1e-14,
    "t_swap": 1e-12,
    "footnote": 1e-10,
    "constraint": 1e-9,
    "casimir": 1e-9,
    "spectrum_rel": 1e-3,
    "spectrum_abs": 1e-3,
    "residual": 1e-4,
    "eop_fit": 1e-6,
    "richardson_lo": 3.0,
    "richardson_hi": 5.0,
}


def get(key, overrides=None):
    """Tolerance for ``key``: explicit override, then environment, then default."""
    if overrides and key in overrides:
        return float(overrides[key])
    env = os.environ.get(ENV_PREFIX + key.upper())
    if env is not None:
        return float(env)
    return _DEFAULTS[key]


def table(overrides=None):
    return {k: get(k, overrides) for k in _DEFAULTS}


def spectrum_match(numeric, analytic, overrides=None):
    """Relative match, switching to absolute for |E| < 1."""
    err = abs(numeric - analytic)
    if abs(analytic) < 1.0:
        return err <= get("spectrum_abs", overrides)
    return err <= get("spectrum_rel", overrides) * abs(analytic)
