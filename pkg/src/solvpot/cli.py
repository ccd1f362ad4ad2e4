"""
Command-line interface.

    solvpot spectrum --family gpt --A 2 --B 5 --branch both --numeric
    solvpot eval --family scarf2 --A 4 --B 2.7 --what potential
    solvpot scatter --family gpt --A 2 --B 5 --k-min 0.1 --k-max 5
    solvpot poles --family gpt --A 2 --B 5 --branch both
    solvpot algebra --family scarf1 --A 3 --B 1 --m 1
    solvpot verify --suite all

Exit codes: 0 success, 1 failed check or singular potential, 2 usage or
validation error. Tolerances can be overridden with ``--tol KEY=VALUE`` or
``SOLVPOT_TOL_<KEY>`` environment variables.
"""

import argparse
import json
import sys

import numpy as np

from . import algebra, oracle, scattering, solver, tolerances, verify
from . import potentials as pot
from .errors import SolvPotError, SingularDenominator
from .potentials import Branch, Family, ParamSet, PotentialSpec
from .susy import IDENTITY_GRIDS

FAMILIES = {"gpt": Family.GPT, "scarf1": Family.SCARF1, "scarf2": Family.SCARF2}


class UsageError(Exception):
    pass


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.17g" % v
    return str(v)


def _json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v) if np.isfinite(v) else None
    return v


def emit(args, meta, columns, rows, checks=(), notes=()):
    """Write a table plus check records as CSV or a single JSON object."""
    if args.format == "json":
        doc = {
            "spec": meta,
            "results": [{c: _json_value(v) for c, v in zip(columns, row)} for row in rows],
            "checks": [c.as_dict() for c in checks],
        }
        if notes:
            doc["notes"] = list(notes)
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"# {k}: {_fmt(v) if not isinstance(v, dict) else json.dumps(v, sort_keys=True)}"
                 for k, v in sorted(meta.items())]
        lines += [f"# note: {n}" for n in notes]
        for c in checks:
            lines.append(f"# check: {c.name}, quantity={_fmt(c.quantity)}, tolerance={_fmt(c.tolerance)}, "
                         f"pass={_fmt(c.passed)}, provenance={c.provenance}")
        lines.append("# columns: " + ",".join(columns))
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _overrides(args):
    out = {}
    for item in args.tol or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--tol expects KEY=VALUE, got {item!r}")
        if key not in tolerances.table():
            raise UsageError(f"unknown tolerance key {key!r}")
        try:
            out[key] = float(value)
        except ValueError as exc:
            raise UsageError(f"bad tolerance value {value!r}") from exc
    return out


def _request(args):
    if args.A is None or args.B is None:
        raise UsageError("--A and --B are required")
    family = FAMILIES[args.family]
    p = ParamSet(float(args.A), float(args.B))
    branch = Branch(args.branch)
    if args.m < 0:
        raise UsageError("--m must be nonnegative")
    return family, p, branch


def _check_window(family, branch, p):
    if branch is Branch.BOTH:
        ok = any(pot.in_window(family, b, p) for b in (Branch.DIRECT, Branch.SWAPPED))
    else:
        ok = pot.in_window(family, branch, p)
    if not ok:
        raise UsageError(f"(A={p.A:g}, B={p.B:g}) is outside the {branch.value} window of {family.value}")


def _meta(args, family=None, p=None, branch=None, **extra):
    meta = {"command": args.command}
    if family is not None:
        meta.update(family=family.value, A=p.A, B=p.B, m=args.m, branch=branch.value)
    meta.update(extra)
    return meta


def _grid(args, family, default):
    lo, hi, n = default
    lo = args.x_min if args.x_min is not None else lo
    hi = args.x_max if args.x_max is not None else hi
    n = args.n_points if args.n_points is not None else n
    return lo, hi, n


def cmd_spectrum(args):
    family, p, branch = _request(args)
    _check_window(family, branch, p)
    spec = PotentialSpec(family, args.m, Branch.DIRECT if branch is Branch.BOTH else branch)
    spectrum = pot.bound_spectrum(spec, p, branch, count_cap=args.count)
    columns = ["branch", "n", "E_analytic"]
    rows = [[lv.branch.value, lv.n, lv.energy] for lv in spectrum.levels]
    notes = []
    if args.numeric:
        columns += ["E_numeric", "abs_err"]
        base = oracle.EIGEN_GRIDS[family]
        grid = solver.Grid(*_grid(args, family, (base.x_min, base.x_max, base.n_points)))
        numeric = {}
        for br in dict.fromkeys(lv.branch for lv in spectrum.levels):
            sub = spec.with_branch(br)
            count = len(spectrum.levels) if family is Family.SCARF1 else None
            numeric[br] = oracle.numeric_levels(sub, p, count=count, grid=grid)
        for row, lv in zip(rows, spectrum.levels):
            vals = numeric[lv.branch]
            if len(vals) == 0:
                row += [None, None]
                continue
            best = vals[np.argmin(np.abs(vals - lv.energy))]
            row += [float(np.real(best)), float(abs(best - lv.energy))]
        notes.append("E_numeric is the oracle eigenvalue nearest to each analytic level")
    n_max = {b.value: ("infinite" if v is None else v) for b, v in spectrum.n_max.items()}
    meta = _meta(args, family, p, branch, n_max=n_max,
                 degenerate=[list(d) for d in spectrum.degenerate])
    emit(args, meta, columns, rows, notes=notes)
    return 0


def cmd_eval(args):
    family, p, branch = _request(args)
    if branch is Branch.BOTH:
        raise UsageError("eval needs --branch direct or swapped")
    _check_window(family, branch, p)
    spec = PotentialSpec(family, args.m, branch)
    lo, hi, n = _grid(args, family, IDENTITY_GRIDS[family])
    x = np.linspace(lo, hi, n)
    report = pot.validate(spec, p)
    if report.singular:
        raise SingularDenominator(f"denominator vanishes at x = {report.singular_points}")
    what = args.what
    if what == "potential":
        vals, tag = pot.eval_potential(spec, p, x), "V = W^2 - W' + E_0"
    elif what == "partner":
        vals, tag = pot.eval_partner(spec, p, x), "V_2 = W^2 + W' + E_0"
    elif what == "superpotential":
        vals, tag = pot.eval_superpotential(spec, p, x), "W"
    else:
        vals, tag = pot.eval_wavefunction(spec, p, args.n, x), f"psi_{args.n}"
    vals = np.asarray(vals, dtype=complex)
    rows = [[xi, v.real, v.imag] for xi, v in zip(x, vals)]
    meta = _meta(args, family, p, branch, what=what, provenance=tag,
                 grid={"x_min": lo, "x_max": hi, "n_points": n})
    if what == "wavefunction":
        meta["n"] = args.n
    emit(args, meta, ["x", "re", "im"], rows)
    return 0


def cmd_scatter(args):
    family, p, branch = _request(args)
    ks = np.linspace(args.k_min, args.k_max, args.k_points)
    if np.any(ks <= 0):
        raise UsageError("k range must be positive")
    overrides = _overrides(args)
    checks = []
    if family is Family.GPT:
        if args.m:
            s = scattering.gpt_s_matrix_xm(p, args.m, ks)
        else:
            s = scattering.gpt_s_matrix(p, Branch.DIRECT if branch is Branch.BOTH else branch, ks)
        rows = [[k, v.real, v.imag, abs(v)] for k, v in zip(ks, s)]
        columns = ["k", "re_S", "im_S", "abs_S"]
        checks.append(verify.CheckRecord("unitarity", float(np.max(np.abs(np.abs(s) - 1.0))),
                                         tolerances.get("unitarity", overrides), "|S(k)| = 1"))
        if args.swap_compare:
            mirror = ParamSet(-p.B - 0.5, -p.A - 0.5)
            dev = np.max(np.abs(scattering.gpt_s_matrix(p, Branch.DIRECT, ks)
                                - scattering.gpt_s_matrix(mirror, Branch.DIRECT, ks)))
            checks.append(verify.CheckRecord("footnote map", float(dev),
                                             tolerances.get("footnote", overrides),
                                             "S(A,B) = S(-B-1/2,-A-1/2)"))
    elif family is Family.SCARF2:
        t = scattering.scarf2_transmission(p, ks)
        r = scattering.scarf2_reflection(p, ks)
        rows = [[k, a.real, a.imag, abs(a), b.real, b.imag, abs(b)] for k, a, b in zip(ks, t, r)]
        columns = ["k", "re_t", "im_t", "abs_t", "re_r", "im_r", "abs_r"]
        if args.swap_compare:
            ts = scattering.scarf2_transmission(pot.swap_params(family, p), ks)
            checks.append(verify.CheckRecord("t swap invariance", float(np.max(np.abs(t - ts))),
                                             tolerances.get("t_swap", overrides),
                                             "t(A,B) = t(swap(A,B))"))
    else:
        raise UsageError("scarf1 is confining; no scattering data")
    emit(args, _meta(args, family, p, branch), columns, rows, checks)
    return 0 if all(c.passed for c in checks) else 1


def cmd_poles(args):
    family, p, branch = _request(args)
    window = None
    if args.kappa_min is not None or args.kappa_max is not None:
        lo = args.kappa_min if args.kappa_min is not None else 1e-6
        hi = args.kappa_max if args.kappa_max is not None else max(abs(p.A), abs(p.B)) + 2.0
        window = (lo, hi)
    try:
        poles = scattering.find_bound_poles(family, p, branch, window)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = [[q.kappa, q.energy, q.branch.value, q.degenerate] for q in poles]
    notes = [] if poles else ["warning: no sign change found in the kappa window"]
    emit(args, _meta(args, family, p, branch), ["kappa", "E", "branch", "degenerate"], rows,
         notes=notes)
    return 0


def cmd_algebra(args):
    family, p, branch = _request(args)
    if branch is Branch.BOTH:
        raise UsageError("algebra needs --branch direct or swapped")
    overrides = _overrides(args)
    r = algebra.realize(family, branch, args.m, p)
    spec, q = r.registry()
    lo, hi, n = _grid(args, family, IDENTITY_GRIDS[family])
    x = np.linspace(lo, hi, n)
    checks = [verify.CheckRecord(f"constraint {c.which}", c.max_abs,
                                 tolerances.get("constraint", overrides), "algebra constraints")
              for c in algebra.check_constraints(r, x)]
    dev = np.max(np.abs(algebra.casimir_potential(r, x) - pot.eval_potential(spec, q, x)))
    checks.append(verify.CheckRecord("casimir potential", float(dev),
                                     tolerances.get("casimir", overrides), "V_k = V(A_eff)"))
    spectrum = algebra.algebra_spectrum(r, count_cap=args.count or 5)
    rows = [[lv.n, r.j(lv.n), lv.energy] for lv in spectrum.levels]
    meta = _meta(args, family, p, branch, kind=r.kind.value, k=r.k, g=r.g)
    emit(args, meta, ["n", "j", "E"], rows, checks)
    return 0 if all(c.passed for c in checks) else 1


def cmd_verify(args):
    overrides = _overrides(args)
    records, observations = verify.run(args.suite, seed=args.seed, overrides=overrides)
    meta = {"command": "verify", "suite": args.suite, "seed": args.seed,
            "tolerances": tolerances.table(overrides)}
    rows = [[o.name, o.value, o.note] for o in observations]
    emit(args, meta, ["observation", "value", "note"], rows, records)
    return 0 if all(r.passed for r in records) else 1


COMMANDS = {
    "spectrum": cmd_spectrum,
    "eval": cmd_eval,
    "scatter": cmd_scatter,
    "poles": cmd_poles,
    "algebra": cmd_algebra,
    "verify": cmd_verify,
}


def _common(p):
    p.add_argument("--family", choices=sorted(FAMILIES), default="gpt")
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--branch", choices=["direct", "swapped", "both"], default="direct")
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--n-points", type=int)
    p.add_argument("--tol", action="append", metavar="KEY=VALUE")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)


def build_parser():
    parser = argparse.ArgumentParser(prog="solvpot", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("spectrum", help="analytic (and numeric) bound-state energies")
    _common(p)
    p.add_argument("--count", type=int)
    p.add_argument("--numeric", action="store_true")
    p = sub.add_parser("eval", help="sampled potential, partner, superpotential or wavefunction")
    _common(p)
    p.add_argument("--what", choices=["potential", "partner", "superpotential", "wavefunction"],
                   default="potential")
    p.add_argument("--n", type=int, default=0)
    p = sub.add_parser("scatter", help="S-matrix or transmission/reflection over a k range")
    _common(p)
    p.add_argument("--k-min", type=float, default=0.05)
    p.add_argument("--k-max", type=float, default=5.0)
    p.add_argument("--k-points", type=int, default=100)
    p.add_argument("--swap-compare", action="store_true")
    p = sub.add_parser("poles", help="bound-state poles on the imaginary k axis")
    _common(p)
    p.add_argument("--kappa-min", type=float)
    p.add_argument("--kappa-max", type=float)
    p = sub.add_parser("algebra", help="potential-algebra realization checks")
    _common(p)
    p.add_argument("--count", type=int)
    p = sub.add_parser("verify", help="run the verification suites")
    _common(p)
    p.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "scatter" and args.A is None and args.B is None:
        defaults = {"gpt": (2.0, 5.0), "scarf2": (4.0, 2.7)}
        args.A, args.B = defaults.get(args.family, (None, None))
    try:
        _overrides(args)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"solvpot {args.command}: {exc}", file=sys.stderr)
        return 2
    except SingularDenominator as exc:
        print(f"solvpot {args.command}: singular potential: {exc}", file=sys.stderr)
        return 1
    except SolvPotError as exc:
        print(f"solvpot {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
