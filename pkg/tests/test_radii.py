"""Radius tests: closed forms, root certificates, branch structure, identities."""

import math

import numpy as np
import pytest

from polybohr import (GOLDEN_CONJUGATE, SQRT2_MINUS_1, FunctionalKind,
                      PolyLabel, RadiusProblem, RhoPolynomial,
                      convex_bound_cubic, convex_rho_closed_form,
                      convex_rho_polynomial, deriv_rho_polynomial,
                      deriv_rho_polynomial_small, deriv_witness_quartic,
                      radius_convex, radius_deriv, radius_for,
                      radius_sq_deriv, solve_unique_positive_root,
                      sq_deriv_rho_polynomial, sq_deriv_rho_polynomial_small)


def reference_bisect(f, lo, hi, iters=200):
    """Plain bisection, independent of the package's solver."""
    flo, fhi = f(lo), f(hi)
    assert flo * fhi < 0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (fhi > 0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def branch_form(t):
    """The two-branch closed form: (1 - 2 sqrt(1-t))/(4t - 3), linear at 3/4."""
    if t == 0.75:
        return 0.5
    return (1.0 - 2.0 * math.sqrt(1.0 - t)) / (4.0 * t - 3.0)


# -- closed form -------------------------------------------------------------------

def test_closed_form_matches_branch_form():
    for t in np.linspace(0.0, 1.0, 101):
        t = float(t)
        if abs(t - 0.75) < 1e-9:
            continue
        assert abs(convex_rho_closed_form(t) - branch_form(t)) < 1e-12


def test_closed_form_special_points():
    assert convex_rho_closed_form(0.0) == pytest.approx(1 / 3, abs=1e-15)
    assert convex_rho_closed_form(0.75) == 0.5  # exact in floating point
    assert convex_rho_closed_form(1.0) == 1.0


def test_closed_form_stable_near_degenerate_weight():
    # the rationalized form stays smooth through t = 3/4
    for dt in (1e-12, 1e-9, 1e-6):
        lo = convex_rho_closed_form(0.75 - dt)
        hi = convex_rho_closed_form(0.75 + dt)
        assert abs(lo - 0.5) < 4 * dt
        assert abs(hi - 0.5) < 4 * dt


# -- convex radius ------------------------------------------------------------------

def test_radius_convex_basics():
    res = radius_convex(1, 1, 0.0)
    assert abs(res.radius - 1 / 3) <= 1e-12
    assert res.residual <= 1e-12
    assert res.branch == PolyLabel.CONVEX_RHO.value
    assert radius_convex(1, 1, 0.75).radius == 0.5
    assert radius_convex(1, 1, 1.0).radius == 1.0


def test_radius_convex_random_configs_match_closed_form():
    rng = np.random.default_rng(1234)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        m = int(rng.integers(1, 7))
        t = float(rng.uniform(0.0, 1.0))
        res = radius_convex(n, m, t)
        rho = convex_rho_closed_form(t)
        assert abs(res.rho_root - rho) <= 1e-10
        assert abs(res.radius - (rho / n) ** (1.0 / m)) <= 1e-10
        assert res.bracket[1] - res.bracket[0] <= 1e-14
        assert res.residual <= 1e-12
        assert 0.0 < res.rho_root <= 1.0


def test_radius_convex_rejects_bad_weight():
    with pytest.raises(ValueError):
        radius_convex(1, 1, -0.1)
    with pytest.raises(ValueError):
        radius_convex(1, 1, 1.5)
    with pytest.raises(ValueError):
        radius_convex(0, 1, 0.5)


# -- deriv radius --------------------------------------------------------------------

def test_radius_deriv_small_weight_root():
    res = radius_deriv(1, 1, 0.5)
    oracle = reference_bisect(lambda p: p ** 4 + p ** 3 + 3 * p - 1, 0.0, SQRT2_MINUS_1)
    assert abs(res.rho_root - oracle) <= 1e-12
    assert res.branch == PolyLabel.DERIV_RHO_SMALL.value
    assert deriv_rho_polynomial_small()(res.rho_root) == pytest.approx(0.0, abs=1e-12)


def test_radius_deriv_weighted_roots_match_reference():
    for lam in (0.6, 0.75, 1.0, 2.0, 10.0):
        res = radius_deriv(1, 1, lam)
        f = lambda p: 2 * lam * p ** 4 + (4 * lam - 1) * p ** 3 + (2 * lam - 1) * p ** 2 + 3 * p - 1
        oracle = reference_bisect(f, 0.0, SQRT2_MINUS_1)
        assert abs(res.rho_root - oracle) <= 1e-12
        assert res.branch == PolyLabel.DERIV_RHO.value
        assert 0.0 < res.rho_root < SQRT2_MINUS_1


def test_radius_deriv_weight_one_factorization():
    # 2L rho^4 + ... at L = 1 factors as (2 rho^2 + 3 rho - 1)(rho^2 + 1),
    # so the root is (sqrt(17) - 3)/4
    for p in np.linspace(0.0, 0.5, 26):
        lhs = deriv_rho_polynomial(1.0)(float(p))
        rhs = (2 * p * p + 3 * p - 1) * (p * p + 1)
        assert abs(lhs - rhs) < 1e-15
    assert abs(radius_deriv(1, 1, 1.0).rho_root - (math.sqrt(17) - 3) / 4) <= 1e-12


def test_radius_deriv_branch_continuity():
    # the two branch polynomials coincide coefficient by coefficient at 1/2
    assert deriv_rho_polynomial(0.5).coefficients == deriv_rho_polynomial_small().coefficients
    below = radius_deriv(2, 2, 0.5).radius
    above = radius_deriv(2, 2, 0.5 + 1e-13).radius
    assert abs(below - above) <= 1e-12


def test_radius_deriv_small_branch_is_weight_independent():
    assert radius_deriv(1, 1, 0.1).rho_root == radius_deriv(1, 1, 0.5).rho_root


def test_radius_deriv_endpoint_value():
    # small-weight quartic at sqrt(2)-1 is exactly 6 - 4 sqrt(2)
    val = deriv_rho_polynomial_small()(SQRT2_MINUS_1)
    assert abs(val - (6.0 - 4.0 * math.sqrt(2.0))) < 1e-14
    assert val > 0


# -- sq-deriv radius ------------------------------------------------------------------

def test_radius_sq_deriv_small_weight_root():
    res = radius_sq_deriv(1, 1, 1.0)
    oracle = reference_bisect(lambda p: p ** 4 + p ** 3 + p * p + 2 * p - 1,
                              0.0, GOLDEN_CONJUGATE)
    assert abs(res.rho_root - oracle) <= 1e-12
    assert abs(res.rho_root - 0.3856) < 5e-4
    assert res.branch == PolyLabel.SQ_DERIV_RHO_SMALL.value


def test_radius_sq_deriv_weighted_roots_match_reference():
    for lam in (1.5, 2.0, 10.0):
        res = radius_sq_deriv(1, 1, lam)
        f = lambda p: lam * p ** 4 + (2 * lam - 1) * p ** 3 + lam * p * p + 2 * p - 1
        oracle = reference_bisect(f, 0.0, GOLDEN_CONJUGATE)
        assert abs(res.rho_root - oracle) <= 1e-12
        assert 0.0 < res.rho_root < GOLDEN_CONJUGATE


def test_radius_sq_deriv_branch_continuity():
    assert sq_deriv_rho_polynomial(1.0).coefficients == \
        sq_deriv_rho_polynomial_small().coefficients
    below = radius_sq_deriv(3, 2, 1.0).radius
    above = radius_sq_deriv(3, 2, 1.0 + 1e-13).radius
    assert abs(below - above) <= 1e-12


def test_sq_deriv_endpoint_identities():
    # weighted quartic at (sqrt(5)-1)/2 equals the weight; small one equals 1
    g = GOLDEN_CONJUGATE
    for lam in (0.25, 1.0, 2.0, 7.5):
        assert abs(sq_deriv_rho_polynomial(lam)(g) - lam) < 1e-13
    assert abs(sq_deriv_rho_polynomial_small()(g) - 1.0) < 1e-14


# -- monotonicity -----------------------------------------------------------------------

def test_radius_monotone_in_n():
    for build in (lambda n: radius_convex(n, 2, 0.4),
                  lambda n: radius_deriv(n, 2, 1.5),
                  lambda n: radius_sq_deriv(n, 2, 2.0)):
        vals = [build(n).radius for n in range(1, 9)]
        assert all(x > y for x, y in zip(vals, vals[1:]))


def test_radius_monotone_in_m():
    # rho/n < 1 throughout, so the m-th root grows strictly with m
    for build in (lambda m: radius_convex(2, m, 0.4),
                  lambda m: radius_deriv(2, m, 1.5),
                  lambda m: radius_sq_deriv(2, m, 2.0)):
        vals = [build(m).radius for m in range(1, 7)]
        assert all(x < y for x, y in zip(vals, vals[1:]))


# -- proof polynomials --------------------------------------------------------------------

def test_convex_bound_cubic_identities():
    rng = np.random.default_rng(77)
    for _ in range(50):
        t = float(rng.uniform(0.0, 1.0))
        rho = float(rng.uniform(0.0, 0.95))
        cubic = convex_bound_cubic(t, rho)
        assert cubic.degree == 3
        assert cubic.label is PolyLabel.CONVEX_A0_CUBIC
        # value at 1 vanishes identically
        assert abs(cubic(1.0)) < 1e-14
        # slope at 1 equals the margin quadratic
        assert abs(cubic.derivative_at(1.0) - convex_rho_polynomial(t)(rho)) < 1e-13


def test_deriv_witness_quartic_identities():
    rng = np.random.default_rng(78)
    for _ in range(50):
        lam = float(rng.uniform(0.05, 3.0))
        rho = float(rng.uniform(0.0, 0.41))
        quartic = deriv_witness_quartic(lam, rho)
        assert quartic.degree == 4
        # value at a = 1 equals the weighted radius quartic at rho
        assert abs(quartic(1.0) - deriv_rho_polynomial(lam)(rho)) < 1e-13
        # value at a = 0 is 2 rho - 1 exactly
        assert quartic(0.0) == 2.0 * rho - 1.0


def test_deriv_witness_quartic_below_small_branch_bound():
    # at lam = 1/2 the quartic never exceeds the small-weight polynomial value
    rho = 0.3
    w_val = deriv_rho_polynomial_small()(rho)
    quartic = deriv_witness_quartic(0.5, rho)
    for a in np.linspace(0.0, 1.0, 201):
        assert quartic(float(a)) <= w_val + 1e-14


# -- solver ------------------------------------------------------------------------------

def test_solver_requires_sign_change():
    poly = convex_rho_polynomial(0.0)
    with pytest.raises(ValueError):
        solve_unique_positive_root(poly, (0.0, 0.1))  # both ends positive
    with pytest.raises(ValueError):
        solve_unique_positive_root(poly, (0.5, 0.5))  # empty bracket


def test_solver_hits_interior_root():
    poly = convex_rho_polynomial(0.0)
    root = solve_unique_positive_root(poly, (0.0, 1.0))
    assert abs(root - 1 / 3) <= 1e-12


def test_solver_endpoint_roots():
    # weight 1 quadratic vanishes at rho = 1 (its double root)
    poly = convex_rho_polynomial(1.0)
    assert solve_unique_positive_root(poly, (0.0, 1.0)) == 1.0
    # degenerate linear case: root exactly 1/2
    res = radius_convex(3, 1, 0.75)
    assert res.rho_root == 0.5
    assert res.residual == 0.0


def test_rho_polynomial_validation_and_derivative():
    with pytest.raises(ValueError):
        RhoPolynomial((1.0, 2.0, 3.0, 4.0, 5.0, 6.0), PolyLabel.CONVEX_RHO)
    with pytest.raises(ValueError):
        RhoPolynomial((), PolyLabel.CONVEX_RHO)
    p = RhoPolynomial((1.0, -2.0, 3.0), PolyLabel.CONVEX_RHO)
    assert p(0.5) == 1.0 - 1.0 + 0.75
    assert p.derivative_at(0.5) == -2.0 + 3.0


# -- problem plumbing -----------------------------------------------------------------------

def test_radius_problem_validation():
    with pytest.raises(ValueError):
        RadiusProblem(FunctionalKind.CONVEX, 1, 1)  # missing t
    with pytest.raises(ValueError):
        RadiusProblem(FunctionalKind.CONVEX, 1, 1, t=0.5, lam=1.0)
    with pytest.raises(ValueError):
        RadiusProblem(FunctionalKind.DERIV, 1, 1, t=0.5)
    with pytest.raises(ValueError):
        RadiusProblem(FunctionalKind.DERIV, 1, 1, lam=0.0)
    assert RadiusProblem(FunctionalKind.CONVEX, 2, 3, t=0.5).weight == 0.5
    assert RadiusProblem(FunctionalKind.SQ_DERIV, 2, 3, lam=2.0).weight == 2.0


def test_radius_for_dispatch():
    assert radius_for(RadiusProblem(FunctionalKind.CONVEX, 2, 2, t=0.3)) == \
        radius_convex(2, 2, 0.3)
    assert radius_for(RadiusProblem(FunctionalKind.DERIV, 2, 2, lam=1.0)) == \
        radius_deriv(2, 2, 1.0)
    assert radius_for(RadiusProblem(FunctionalKind.SQ_DERIV, 2, 2, lam=2.0)) == \
        radius_sq_deriv(2, 2, 2.0)


def test_univariate_specializations():
    # n = m = 1 reproduces the classical one-variable values
    assert abs(radius_convex(1, 1, 0.0).radius - 1 / 3) <= 1e-12
    assert radius_convex(1, 1, 0.75).radius == 0.5
    assert abs(radius_deriv(1, 1, 0.5).radius - 0.3191) < 5e-4
    assert abs(radius_deriv(1, 1, 1.0).radius - (math.sqrt(17) - 3) / 4) <= 1e-12
