"""Command-line interface for the polydisc Bohr-radius toolkit.

Subcommands:

- radius     one certified radius as JSON
- verify     below-radius safety and majorant-dominance sweeps (exit 2 on any violation)
- sharpness  explicit witness just beyond the stated radius
- sweep      radius curve along one parameter, as CSV
- table      radius table over (n, m, weight) lists, as CSV

Exit codes: 0 success, 1 usage or invalid parameters, 2 verification failure.
CSV is written with 12 significant digits, '.' decimals, LF line endings;
JSON key order is fixed so identical invocations produce identical bytes.
The default seed is 1234, overridable by the BOHR_SEED environment variable
and the --seed flag.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .bounds import DEFAULT_SEED
from .extremal import (Functional, WitnessNotFoundError, _functional_value,
                       majorant_functional, sharpness_witness)
from .radii import (GOLDEN_CONJUGATE, SQRT2_MINUS_1, FunctionalKind,
                    RadiusProblem, radius_for)

_KINDS = {
    "convex": FunctionalKind.CONVEX,
    "deriv": FunctionalKind.DERIV,
    "sq_deriv": FunctionalKind.SQ_DERIV,
}

_MAJORANT_CAP = {
    FunctionalKind.CONVEX: 1.0 - 1e-9,
    FunctionalKind.DERIV: SQRT2_MINUS_1,
    FunctionalKind.SQ_DERIV: GOLDEN_CONJUGATE,
}


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1; argparse's default is 2, which this CLI
    # reserves for verification failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    return format(float(x), ".12g")


def _write_out(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    return int(os.environ.get("BOHR_SEED", DEFAULT_SEED))


def _problem_from_args(args) -> RadiusProblem:
    kind = _KINDS[args.theorem]
    if kind is FunctionalKind.CONVEX:
        if args.t is None:
            raise ValueError("--theorem convex requires --t")
        if args.lam is not None:
            raise ValueError("--theorem convex takes no --lambda")
        return RadiusProblem(kind, args.n, args.m, t=args.t)
    if args.lam is None:
        raise ValueError(f"--theorem {args.theorem} requires --lambda")
    if args.t is not None:
        raise ValueError(f"--theorem {args.theorem} takes no --t")
    return RadiusProblem(kind, args.n, args.m, lam=args.lam)


def _weight(problem: RadiusProblem) -> float:
    return problem.t if problem.kind is FunctionalKind.CONVEX else problem.lam


# -- subcommands ---------------------------------------------------------------

def cmd_radius(args) -> int:
    problem = _problem_from_args(args)
    res = radius_for(problem)
    payload = {
        "radius": res.radius,
        "rho_root": res.rho_root,
        "residual": res.residual,
        "branch": res.branch,
        "bracket": [res.bracket[0], res.bracket[1]],
    }
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    if args.a_grid < 10 or args.rho_grid < 10:
        raise ValueError("grid sizes must be >= 10")
    if args.inflate_radius < 0.0:
        raise ValueError("--inflate-radius must be >= 0")
    problem = _problem_from_args(args)
    res = radius_for(problem)
    func = Functional.from_problem(problem)
    r_checked = res.radius * (1.0 + args.inflate_radius)
    rho_max = problem.n * r_checked ** problem.m
    avals = np.linspace(0.0, 1.0, args.a_grid, endpoint=False)
    rhos = np.linspace(0.0, rho_max, args.rho_grid)

    max_value = 0.0
    below_violations = []
    for rho in rhos:
        vals = _functional_value(func, avals, float(rho))
        top = float(np.max(vals))
        if top > max_value:
            max_value = top
        for i in np.nonzero(vals > 1.0 + 1e-12)[0]:
            below_violations.append([float(avals[i]), float(rho), float(vals[i])])

    dominance_violations = []
    min_margin = float("inf")
    cap = _MAJORANT_CAP[func.kind]
    for rho in rhos:
        rr = float(min(rho, cap))
        for a in avals:
            margin = majorant_functional(func, float(a), rr) - \
                _functional_value(func, float(a), rr)
            if margin < min_margin:
                min_margin = margin
            if margin < -1e-12:
                dominance_violations.append([float(a), rr, float(margin)])

    ok = not below_violations and not dominance_violations
    payload = {
        "kind": func.kind.value,
        "n": problem.n,
        "m": problem.m,
        "weight": _weight(problem),
        "seed": _resolve_seed(args),
        "radius": res.radius,
        "inflate_radius": args.inflate_radius,
        "rho_max": rho_max,
        "a_grid": args.a_grid,
        "rho_grid": args.rho_grid,
        "max_value_below_radius": max_value,
        "dominance_min_margin": min_margin,
        "violations_below_radius": below_violations[:20],
        "violations_dominance": dominance_violations[:20],
        "ok": ok,
    }
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if ok else 2


def cmd_sharpness(args) -> int:
    problem = _problem_from_args(args)
    res = radius_for(problem)
    witness = sharpness_witness(problem, delta=args.delta)
    payload = {
        "kind": problem.kind.value,
        "n": problem.n,
        "m": problem.m,
        "weight": _weight(problem),
        "delta": args.delta,
        "radius": res.radius,
        "rho": witness.rho,
        "a": witness.a,
        "value": witness.value,
    }
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _sweep_values(args):
    if args.param in ("t", "lambda"):
        if args.steps is None:
            raise ValueError("--steps is required for t/lambda sweeps")
        if args.steps < 2:
            raise ValueError("--steps must be >= 2")
        if not args.start < args.stop:
            raise ValueError("need --from < --to")
        return [float(x) for x in np.linspace(args.start, args.stop, args.steps)]
    lo, hi = int(args.start), int(args.stop)
    if lo != args.start or hi != args.stop:
        raise ValueError(f"{args.param} sweep endpoints must be integers")
    if not lo < hi:
        raise ValueError("need --from < --to")
    return list(range(lo, hi + 1))


def cmd_sweep(args) -> int:
    kind = _KINDS[args.theorem]
    values = _sweep_values(args)
    rows = ["param,radius,rho_root,residual"]
    for v in values:
        if args.param == "t":
            problem = RadiusProblem(kind, args.n, args.m, t=float(v))
        elif args.param == "lambda":
            problem = RadiusProblem(kind, args.n, args.m, lam=float(v))
        elif args.param == "n":
            problem = _problem_with_nm(kind, int(v), args.m, args)
        else:
            problem = _problem_with_nm(kind, args.n, int(v), args)
        res = radius_for(problem)
        rows.append(",".join([_fmt(v), _fmt(res.radius), _fmt(res.rho_root),
                              _fmt(res.residual)]))
    _write_out("\n".join(rows) + "\n", args.out)
    return 0


def _problem_with_nm(kind, n, m, args) -> RadiusProblem:
    if kind is FunctionalKind.CONVEX:
        if args.t is None:
            raise ValueError("n/m sweeps for convex require --t")
        return RadiusProblem(kind, n, m, t=args.t)
    if args.lam is None:
        raise ValueError(f"n/m sweeps for {args.theorem} require --lambda")
    return RadiusProblem(kind, n, m, lam=args.lam)


def _parse_list(text, cast):
    if text is None or text.strip() == "":
        return []
    return [cast(tok) for tok in text.split(",") if tok.strip() != ""]


def cmd_table(args) -> int:
    kind = _KINDS[args.theorem]
    ns = _parse_list(args.n_list, int)
    ms = _parse_list(args.m_list, int)
    if kind is FunctionalKind.CONVEX:
        if args.lambda_list is not None:
            raise ValueError("--theorem convex takes --t-list, not --lambda-list")
        weights = _parse_list(args.t_list, float)
    else:
        if args.t_list is not None:
            raise ValueError(f"--theorem {args.theorem} takes --lambda-list, not --t-list")
        weights = _parse_list(args.lambda_list, float)
    rows = ["n,m,param,radius,rho_root,residual"]
    for n in ns:
        for m in ms:
            for w in weights:
                if kind is FunctionalKind.CONVEX:
                    problem = RadiusProblem(kind, n, m, t=w)
                else:
                    problem = RadiusProblem(kind, n, m, lam=w)
                res = radius_for(problem)
                rows.append(",".join([str(n), str(m), _fmt(w), _fmt(res.radius),
                                      _fmt(res.rho_root), _fmt(res.residual)]))
    _write_out("\n".join(rows) + "\n", args.out)
    return 0


# -- parser ----------------------------------------------------------------------

def _add_common(sub, weights=True):
    sub.add_argument("--theorem", required=True, choices=sorted(_KINDS),
                     help="functional kind")
    sub.add_argument("--n", type=int, default=1, help="number of variables")
    sub.add_argument("--m", type=int, default=1, help="power-map order")
    if weights:
        sub.add_argument("--t", type=float, default=None,
                         help="convex weight in [0, 1]")
        sub.add_argument("--lambda", dest="lam", type=float, default=None,
                         help="tail weight > 0 for deriv / sq_deriv")
    sub.add_argument("--seed", type=int, default=None,
                     help=f"seed for randomized checks (default {DEFAULT_SEED}, "
                          "or BOHR_SEED)")
    sub.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polybohr",
                     description="Sharp Bohr-type radii on the unit polydisc")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("radius", help="one certified radius as JSON")
    _add_common(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("verify", help="below-radius and dominance sweeps")
    _add_common(p)
    p.add_argument("--a-grid", type=int, default=200, help="a-grid size (>= 10)")
    p.add_argument("--rho-grid", type=int, default=50, help="rho-grid size (>= 10)")
    p.add_argument("--inflate-radius", type=float, default=0.0,
                   help="inflate the checked radius by this fraction "
                        "(negative control; 0.01 = +1%%)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", help="witness just beyond the radius")
    _add_common(p)
    p.add_argument("--delta", type=float, default=1e-3,
                   help="relative overshoot of rho (default 1e-3)")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("sweep", help="radius curve along one parameter (CSV)")
    _add_common(p)
    p.add_argument("--param", required=True, choices=["t", "lambda", "n", "m"])
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, default=None,
                   help="grid size for t/lambda sweeps (>= 2); n/m sweeps "
                        "use integer steps of 1")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", help="radius table over (n, m, weight) lists (CSV)")
    p.add_argument("--theorem", required=True, choices=sorted(_KINDS))
    p.add_argument("--n-list", default="", help="comma-separated n values")
    p.add_argument("--m-list", default="", help="comma-separated m values")
    p.add_argument("--t-list", default=None, help="comma-separated t values (convex)")
    p.add_argument("--lambda-list", default=None,
                   help="comma-separated lambda values (deriv / sq_deriv)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except WitnessNotFoundError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
