"""
Verification suites behind ``solvpot verify``.

Each suite returns ``CheckRecord`` items (asserted, pass iff quantity <=
tolerance) and ``Observation`` items (measured and reported only).
"""

from dataclasses import dataclass

import numpy as np

from . import algebra, fixtures, oracle, scattering, susy, tolerances
from . import potentials as pot
from .potentials import Branch, Family, ParamSet, PotentialSpec

SUITES = ("swap", "susy", "scattering", "algebra", "numeric")


@dataclass(frozen=True)
class CheckRecord:
    name: str
    quantity: float
    tolerance: float
    provenance: str

    @property
    def passed(self):
        return bool(self.quantity <= self.tolerance)

    def as_dict(self):
        return {"name": self.name, "quantity": _finite(self.quantity),
                "tolerance": self.tolerance, "pass": self.passed, "provenance": self.provenance}


@dataclass(frozen=True)
class Observation:
    name: str
    value: float
    note: str

    def as_dict(self):
        return {"name": self.name, "value": _finite(self.value), "note": self.note}


def _finite(v):
    v = float(v)
    return v if np.isfinite(v) else None


def _domain_sample(family, rng, size):
    lo, hi, _ = susy.IDENTITY_GRIDS[family]
    return np.sort(rng.uniform(lo, hi, size))


def _label(spec, p):
    return f"{spec.family.value} {spec.branch.value} m={spec.m} (A={p.A:g}, B={p.B:g})"


def suite_swap(rng, tol):
    records, obs = [], []
    for family, p in ((Family.GPT, fixtures.GPT), (Family.SCARF1, fixtures.SCARF1_DIRECT),
                      (Family.SCARF2, fixtures.SCARF2)):
        spec = PotentialSpec(family)
        x = _domain_sample(family, rng, 1000)
        dev = np.max(np.abs(pot.eval_potential(spec, p, x)
                            - pot.eval_potential(spec, pot.swap_params(family, p), x)))
        records.append(CheckRecord(f"swap invariance {family.value} (A={p.A:g}, B={p.B:g})",
                                   float(dev), tol("swap"), "V(A,B) = V(swap(A,B))"))
        back = pot.swap_params(family, pot.swap_params(family, p))
        records.append(CheckRecord(f"swap involution {family.value}",
                                   abs(back.A - p.A) + abs(back.B - p.B), tol("swap"),
                                   "swap(swap(p)) = p"))
    for branch in (Branch.DIRECT, Branch.SWAPPED):
        for m in (0, 1):
            spec = PotentialSpec(Family.SCARF2, m, branch)
            x = _domain_sample(Family.SCARF2, rng, 1000)
            dev = np.max(np.abs(np.conj(pot.eval_potential(spec, fixtures.SCARF2, x))
                                - pot.eval_potential(spec, fixtures.SCARF2, -x)))
            records.append(CheckRecord(f"PT symmetry {_label(spec, fixtures.SCARF2)}",
                                       float(dev), tol("pt_symmetry"), "conj V(x) = V(-x)"))
    return records, obs


def suite_susy(rng, tol):
    records, obs = [], []
    cases = [(f, b, 0, p) for f, b, p in fixtures.CONVENTIONAL]
    cases += [(f, b, 1, p) for f, b, p in fixtures.EXTENDED]
    for family, branch, m, p in cases:
        spec = PotentialSpec(family, m, branch)
        label = _label(spec, p)
        fac = susy.check_factorization(spec, p, tol=tol("factorization"))
        records.append(CheckRecord(f"factorization {label}", fac.max_rel_deviation,
                                   fac.tolerance, "V = W^2 - W' + E_0"))
        part = susy.check_partner(spec, p, tol=tol("partner_m0" if m == 0 else "partner_xm"))
        records.append(CheckRecord(f"partner {label}", part.max_rel_deviation, part.tolerance,
                                   "W^2 + W' + E_0 = V(shifted p)"))
        shape = susy.check_shape_invariance(spec, p, tol=tol("shape_constant"))
        records.append(CheckRecord(f"shape constant {label}",
                                   shape.details["constant_deviation"], shape.tolerance,
                                   "R = E_0(shifted p) - E_0(p)"))
    return records, obs


def suite_scattering(rng, tol):
    records, obs = [], []
    p = fixtures.GPT
    ks = rng.uniform(0.0, 5.0, 100) + 1e-3
    for branch in (Branch.DIRECT, Branch.SWAPPED):
        dev = np.max(np.abs(np.abs(scattering.gpt_s_matrix(p, branch, ks)) - 1.0))
        records.append(CheckRecord(f"unitarity gpt {branch.value}", float(dev), tol("unitarity"),
                                   "|S(k)| = 1"))
    m1 = ParamSet(5.0, 2.0)
    dev = np.max(np.abs(np.abs(scattering.gpt_s_matrix_xm(m1, 1, ks)) - 1.0))
    records.append(CheckRecord("unitarity gpt X_1 (A=5, B=2)", float(dev), tol("unitarity"),
                               "|S^m(k)| = 1"))
    dev = np.max(np.abs(scattering.gpt_s_matrix_xm(p, 0, ks)
                        - scattering.gpt_s_matrix(p, Branch.SWAPPED, ks)))
    records.append(CheckRecord("X_m S-matrix at m=0", float(dev), tol("sctm_reduction"),
                               "S^0 = S(B<->A+1/2)"))
    mirror = ParamSet(-p.B - 0.5, -p.A - 0.5)
    dev = np.max(np.abs(scattering.gpt_s_matrix(p, Branch.DIRECT, ks)
                        - scattering.gpt_s_matrix(mirror, Branch.DIRECT, ks)))
    records.append(CheckRecord("footnote map (A,B)->(-B-1/2,-A-1/2)", float(dev),
                               tol("footnote"), "S(A,B) = S(-B-1/2,-A-1/2)"))
    for family, q in ((Family.GPT, p), (Family.SCARF2, fixtures.SCARF2)):
        for branch in (Branch.DIRECT, Branch.SWAPPED):
            found = [pole.kappa for pole in scattering.find_bound_poles(family, q, branch)]
            spec = PotentialSpec(family, 0, branch)
            top = pot.n_max(family, branch, q)
            expected = [pot.effective_params(spec, q).A - n for n in range(top + 1)]
            dev = (np.max(np.abs(np.array(found) - np.array(expected)))
                   if len(found) == len(expected) else float("inf"))
            records.append(CheckRecord(f"poles {family.value} {branch.value}", float(dev),
                                       tol("pole"), "kappa_n = A_eff - n"))
        both = scattering.find_bound_poles(family, q, Branch.BOTH)
        energies = np.sort([pole.energy for pole in both])
        analytic = pot.bound_spectrum(PotentialSpec(family), q, Branch.BOTH).energies
        dev = (np.max(np.abs(energies - analytic)) if len(energies) == len(analytic)
               else float("inf"))
        records.append(CheckRecord(f"poles {family.value} both vs spectrum", float(dev),
                                   tol("pole"), "E = -kappa^2"))
    q = fixtures.SCARF2
    qs = pot.swap_params(Family.SCARF2, q)
    dev = np.max(np.abs(scattering.scarf2_transmission(q, ks)
                        - scattering.scarf2_transmission(qs, ks)))
    records.append(CheckRecord("scarf2 t(k) swap invariance", float(dev), tol("t_swap"),
                               "t(A,B) = t(swap(A,B))"))
    rdev = np.max(np.abs(scattering.scarf2_reflection(q, ks) - scattering.scarf2_reflection(qs, ks)))
    obs.append(Observation("scarf2 r(k) swap difference", float(rdev),
                           "measured only; no invariance is asserted"))
    return records, obs


def shipped_realizations():
    out = []
    for m in (0, 1):
        table = fixtures.EXTENDED if m else fixtures.CONVENTIONAL
        for family, branch, p in table:
            out.append(algebra.realize(family, branch, m, p))
    return out


def suite_algebra(rng, tol):
    records, obs = [], []
    for r in shipped_realizations():
        label = f"{r.kind.value} {r.family.value} {r.branch.value} m={r.m} k={r.k:g}"
        for res in algebra.check_constraints(r):
            records.append(CheckRecord(f"constraint {res.which} {label}", res.max_abs,
                                       tol("constraint"),
                                       "iso constraints" if r.kind is algebra.Kind.ISO21
                                       else "so(2,1) constraints"))
        spec, p = r.registry()
        x = susy.identity_grid(r.family)
        v = algebra.casimir_potential(r, x)
        dev = np.max(np.abs(v - pot.eval_potential(spec, p, x)))
        records.append(CheckRecord(f"casimir potential {label}", float(dev), tol("casimir"),
                                   "V_k = V(A_eff = k -/+ 1/2)"))
        a = algebra.algebra_spectrum(r, count_cap=5).energies
        b = pot.bound_spectrum(spec, p, count_cap=5).energies
        same = len(a) == len(b) and bool(np.all(a == b))
        records.append(CheckRecord(f"algebra spectrum {label}", 0.0 if same else 1.0, 0.0,
                                   "E_n = -(n-(k-1/2))^2 / (k+1/2+n)^2"))
        if r.kind is algebra.Kind.ISO21 and r.m:
            lit = algebra.check_constraints(r, literal=True)[2].max_abs
            obs.append(Observation(f"iso U condition with F(k+1/2) in both brackets, {label}",
                                   lit, "literal reading; the F(k-1/2) reading is asserted"))
        if r.m and r.branch is Branch.SWAPPED and r.family is not Family.SCARF1:
            u = r.eval_U(x, r.k - 0.5)[0]
            for reading in ("A", "B"):
                d = np.max(np.abs(algebra.printed_u_xm(r, x, r.k - 0.5, reading) - u))
                obs.append(Observation(f"X_m U prefactor (m-2{reading}-2), {label}", float(d),
                                       "distance to the U that satisfies the constraints"))
    return records, obs


def suite_numeric(rng, tol):
    records, obs = [], []
    st = tol("spectrum_rel")
    for family, p in ((Family.GPT, fixtures.GPT), (Family.SCARF2, fixtures.SCARF2)):
        u = oracle.union_spectrum(family, p)
        records.append(CheckRecord(f"union spectrum {family.value} (A={p.A:g}, B={p.B:g})",
                                   u["distance"], st, "E_n=-(A-n)^2 and E_n=-(B-n-1/2)^2"))
    for branch, p in ((Branch.DIRECT, fixtures.SCARF1_DIRECT), (Branch.SWAPPED, fixtures.SCARF1_SWAPPED)):
        spec = PotentialSpec(Family.SCARF1, 0, branch)
        res = oracle.branch_match(spec, p, count=3)
        records.append(CheckRecord(f"spectrum {_label(spec, p)}", res["mismatch"], st,
                                   "E_n=(A+n)^2 / (B+n+1/2)^2"))
    for family, branch, p in fixtures.EXTENDED:
        spec = PotentialSpec(family, 1, branch)
        res = oracle.branch_match(spec, p, count=3)
        records.append(CheckRecord(f"isospectral {_label(spec, p)}", res["mismatch"], st,
                                   "spectrum(m=1) = spectrum(m=0)"))
    for branch in (Branch.DIRECT, Branch.SWAPPED):
        for m in (0, 1):
            spec = PotentialSpec(Family.SCARF2, m, branch)
            top = pot.n_max(Family.SCARF2, branch, fixtures.SCARF2)
            worst = max(oracle.analytic_residual(spec, fixtures.SCARF2, n) for n in range(top + 1))
            records.append(CheckRecord(f"analytic residual {_label(spec, fixtures.SCARF2)}",
                                       worst, tol("residual"), "(H - E_n) psi_n = 0"))
    spec = PotentialSpec(Family.GPT)
    records.append(CheckRecord("analytic residual gpt direct n=1 (A=2, B=5)",
                               oracle.analytic_residual(spec, fixtures.GPT, 1), tol("residual"),
                               "(H - E_n) psi_n = 0"))
    for family, branch, p in fixtures.EOP:
        spec = PotentialSpec(family, 1, branch)
        for n in range(3):
            records.append(CheckRecord(f"EOP fit n={n} {_label(spec, p)}",
                                       oracle.eop_fit(spec, p, n), tol("eop_fit"),
                                       "psi = phi/xi * P^_{n+m}"))
    ratios = oracle.richardson_ratios(fixtures.GPT_THREE_LEVELS)
    lo, hi = tol("richardson_lo"), tol("richardson_hi")
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    for n, ratio in enumerate(ratios):
        records.append(CheckRecord(f"Richardson ratio gpt direct n={n}", float(abs(ratio - mid)),
                                   half, "error ratio in [3, 5] under h -> h/2"))
    return records, obs


_RUNNERS = {
    "swap": suite_swap,
    "susy": suite_susy,
    "scattering": suite_scattering,
    "algebra": suite_algebra,
    "numeric": suite_numeric,
}


def run(suite="all", seed=0, overrides=None):
    """Run one suite (or all) and return (records, observations)."""
    names = SUITES if suite == "all" else (suite,)
    if any(n not in _RUNNERS for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    rng = np.random.default_rng(seed)

    def tol(key):
        return tolerances.get(key, overrides)

    records, obs = [], []
    for name in names:
        r, o = _RUNNERS[name](rng, tol)
        records.extend(r)
        obs.extend(o)
    return records, obs
