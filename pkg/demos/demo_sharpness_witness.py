"""Witness search: explicit parameters pushing each functional above 1.

Just beyond the stated radius a one-parameter family of polydisc self-maps
already violates the bound, which is what makes the radius sharp rather than
merely safe. This demo prints the witnesses the search finds, then shows the
one honest exception: for small derivative weights (lam < 1/2 for the linear
head, lam < 1 for the squared head) the family's first crossing of 1 sits
strictly above the stated radius, so no witness exists there and the search
says so instead of inventing one.
"""

from polybohr import (FunctionalKind, RadiusProblem, WitnessNotFoundError,
                      empirical_radius, radius_for, sharpness_witness)


def show_witness(problem, delta=1e-3):
    res = radius_for(problem)
    weight = problem.t if problem.kind is FunctionalKind.CONVEX else problem.lam
    tag = f"{problem.kind.value:<9} n={problem.n} m={problem.m} weight={weight}"
    try:
        w = sharpness_witness(problem, delta=delta)
        print(f"[witness] {tag}")
        print(f"          rho = {w.rho:.12f} (stated root {res.rho_root:.12f} "
              f"inflated by {delta:.0e})")
        print(f"          a = {w.a:.12f} pushes the functional to "
              f"{w.value:.12f} > 1")
        return True
    except WitnessNotFoundError as exc:
        print(f"[none]    {tag}")
        print(f"          {exc}")
        return False


def main() -> int:
    print("=" * 72)
    print("Sharpness witnesses just beyond the stated radius")
    print("=" * 72)
    sharp = [
        RadiusProblem(FunctionalKind.CONVEX, 1, 1, t=0.0),
        RadiusProblem(FunctionalKind.CONVEX, 2, 1, t=0.75),
        RadiusProblem(FunctionalKind.CONVEX, 4, 2, t=0.9),
        RadiusProblem(FunctionalKind.DERIV, 1, 1, lam=0.5),
        RadiusProblem(FunctionalKind.DERIV, 2, 2, lam=1.0),
        RadiusProblem(FunctionalKind.SQ_DERIV, 1, 1, lam=1.0),
        RadiusProblem(FunctionalKind.SQ_DERIV, 3, 1, lam=2.5),
    ]
    ok = all(show_witness(p) for p in sharp)
    print()
    print("-" * 72)
    print("Small weights: the stated radius is safe but the family is not")
    print("tight there, so the honest answer is that no witness exists.")
    print("-" * 72)
    conservative = [
        RadiusProblem(FunctionalKind.DERIV, 1, 1, lam=0.25),
        RadiusProblem(FunctionalKind.SQ_DERIV, 1, 1, lam=0.5),
    ]
    for problem in conservative:
        found = show_witness(problem)
        if found:
            ok = False
            continue
        stated = radius_for(problem).rho_root
        crossing = empirical_radius(problem)
        print(f"          family first crosses 1 at rho = {crossing:.7f}, "
              f"above the stated root {stated:.7f}")
    print()
    if not ok:
        print("Unexpected witness behavior; see lines above.")
        return 1
    print("Witnesses found on every sharp branch; small-weight branches")
    print("reported honestly as having none.")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
