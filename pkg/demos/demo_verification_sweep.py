"""Safety sweep: the functionals stay at or below 1 inside the stated radius.

For a grid of configurations this drives the exact witness-family values and
the majorant chain across (a, rho) grids, checking two properties:

  1. below the stated radius the witness family never pushes the functional
     above 1 (the radius is safe);
  2. the majorant dominates the exact family value pointwise (the upper
     bound chain is a genuine upper bound).

A deliberately inflated radius is checked last as a negative control: the
sweep must detect the violation, otherwise it is not testing anything.
"""

import numpy as np

from polybohr import (GOLDEN_CONJUGATE, SQRT2_MINUS_1, Functional,
                      FunctionalKind, RadiusProblem, extremal_functional,
                      majorant_functional, radius_for)

A_GRID = 400
RHO_GRID = 60

# the majorant chains are stated on bounded rho ranges; clamp the dominance
# sweep there while the safety sweep runs all the way to the stated radius
MAJORANT_CAP = {
    FunctionalKind.CONVEX: 1.0 - 1e-9,
    FunctionalKind.DERIV: SQRT2_MINUS_1,
    FunctionalKind.SQ_DERIV: GOLDEN_CONJUGATE,
}


def sweep(problem, inflate=0.0):
    """Max family value below the (possibly inflated) radius and the min
    majorant-minus-family margin; returns (max_value, min_margin)."""
    res = radius_for(problem)
    func = Functional.from_problem(problem)
    r = res.radius * (1.0 + inflate)
    rho_max = problem.n * r ** problem.m
    cap = MAJORANT_CAP[func.kind]
    avals = np.linspace(0.0, 1.0, A_GRID, endpoint=False)
    max_value = 0.0
    min_margin = float("inf")
    for rho in np.linspace(0.0, rho_max, RHO_GRID):
        rho = float(rho)
        for a in avals:
            a = float(a)
            if a * rho >= 1.0:
                continue
            max_value = max(max_value, extremal_functional(func, a, rho))
            rr = min(rho, cap)
            margin = majorant_functional(func, a, rr) - \
                extremal_functional(func, a, rr)
            min_margin = min(min_margin, margin)
    return max_value, min_margin


def main() -> int:
    print("=" * 72)
    print("Below-radius safety and majorant dominance")
    print("=" * 72)
    configs = [
        RadiusProblem(FunctionalKind.CONVEX, 1, 1, t=0.0),
        RadiusProblem(FunctionalKind.CONVEX, 2, 1, t=0.75),
        RadiusProblem(FunctionalKind.CONVEX, 4, 2, t=0.9),
        RadiusProblem(FunctionalKind.DERIV, 1, 1, lam=0.5),
        RadiusProblem(FunctionalKind.DERIV, 2, 2, lam=1.0),
        RadiusProblem(FunctionalKind.DERIV, 4, 1, lam=2.0),
        RadiusProblem(FunctionalKind.SQ_DERIV, 1, 1, lam=1.0),
        RadiusProblem(FunctionalKind.SQ_DERIV, 3, 2, lam=2.0),
    ]
    failures = 0
    for problem in configs:
        max_value, min_margin = sweep(problem)
        weight = problem.t if problem.kind is FunctionalKind.CONVEX else problem.lam
        ok = max_value <= 1.0 + 1e-12 and min_margin >= -1e-12
        status = "PASS" if ok else "FAIL"
        failures += 0 if ok else 1
        print(f"[{status}] {problem.kind.value:<9} n={problem.n} m={problem.m} "
              f"weight={weight:<5} max value {max_value:.12f}  "
              f"min dominance margin {min_margin:+.2e}")
    print()
    print("Negative control: same sweep with the radius inflated by 1%.")
    problem = RadiusProblem(FunctionalKind.CONVEX, 2, 1, t=0.3)
    max_value, _ = sweep(problem, inflate=0.01)
    if max_value > 1.0 + 1e-12:
        print(f"[PASS] violation detected as required: max value "
              f"{max_value:.12f} > 1")
    else:
        failures += 1
        print(f"[FAIL] inflated radius went undetected (max {max_value:.12f})")
    print()
    if failures:
        print(f"{failures} check(s) failed.")
        return 1
    print("All sweeps behaved as certified.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
