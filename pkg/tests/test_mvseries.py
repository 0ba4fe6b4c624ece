"""Series engine tests: exact algebra, Mobius oracles, calculus properties."""

import cmath
import math

import numpy as np
import pytest

from polybohr import (Direction, MultiIndex, SchwarzPowerMap, TruncatedSeries,
                      multi_indices)


def mobius_coeffs(a, n, max_degree):
    """Expansion of (a - s)/(1 - a s), s = z_1 + ... + z_n, built from scratch.

    Constant a; for |alpha| = k >= 1 the coefficient is
    -(1 - a^2) a^(k-1) k!/alpha!.  Kept local so these tests do not depend on
    the package's own witness-series builder.
    """
    coeffs = {(0,) * n: a}
    for k in range(1, max_degree + 1):
        for alpha in multi_indices(n, k):
            mult = math.factorial(k)
            for e in alpha:
                mult //= math.factorial(e)
            coeffs[alpha] = -(1 - a * a) * a ** (k - 1) * mult
    return coeffs


def random_series(rng, n, max_degree, scale=1.0):
    coeffs = {}
    for k in range(max_degree + 1):
        for alpha in multi_indices(n, k):
            re, im = rng.uniform(-scale, scale, size=2)
            coeffs[alpha] = complex(re, im)
    return TruncatedSeries(n, max_degree, coeffs)


# -- MultiIndex ----------------------------------------------------------------

def test_multi_index_degree_and_factorial():
    idx = MultiIndex((3, 0, 2))
    assert idx.degree == 5
    assert idx.factorial == 12
    assert idx.n_vars == 3
    assert MultiIndex((0,)).factorial == 1
    # exact big-integer factorials, no overflow
    assert MultiIndex((20,)).factorial == math.factorial(20)


def test_multi_index_rejects_bad_entries():
    with pytest.raises(ValueError):
        MultiIndex((1, -1))
    with pytest.raises(ValueError):
        MultiIndex((0.5,))
    with pytest.raises(ValueError):
        MultiIndex(())


def test_multi_indices_enumeration_and_multinomial_sum():
    assert sorted(multi_indices(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    for n in (1, 2, 3, 4):
        for k in (0, 1, 2, 5, 8):
            idxs = list(multi_indices(n, k))
            assert len(idxs) == math.comb(k + n - 1, n - 1)
            total = sum(math.factorial(k) // a.factorial for a in idxs)
            assert total == n ** k  # multinomial theorem at z = (1, ..., 1)


# -- construction --------------------------------------------------------------

def test_series_drops_zeros_and_reports_missing_as_zero():
    s = TruncatedSeries(2, 3, {(1, 0): 2.0, (0, 1): 0.0})
    assert len(s.coeffs) == 1
    assert s.coefficient((0, 1)) == 0
    assert s.coefficient((1, 0)) == 2.0


def test_series_rejects_bad_indices():
    with pytest.raises(ValueError):
        TruncatedSeries(2, 3, {(1,): 1.0})  # wrong arity
    with pytest.raises(ValueError):
        TruncatedSeries(2, 3, {(2, 2): 1.0})  # beyond max_degree
    with pytest.raises(ValueError):
        TruncatedSeries(0, 3, {})
    with pytest.raises(ValueError):
        TruncatedSeries(2, -1, {})


def test_degree_slice():
    s = TruncatedSeries(2, 2, {(0, 0): 1, (1, 0): 2, (0, 1): 3, (1, 1): 4})
    assert s.degree_slice(1) == {(1, 0): 2, (0, 1): 3}
    assert s.degree_slice(2) == {(1, 1): 4}


# -- eval ----------------------------------------------------------------------

def test_eval_univariate_mobius_truncation():
    # (0.5 - z)/(1 - 0.5 z) at z = 0.2 is exactly 1/3; degree-8 truncation
    # carries a tail below 2e-9
    s = TruncatedSeries(1, 8, mobius_coeffs(0.5, 1, 8))
    assert abs(s.eval((0.2,)) - (0.5 - 0.2) / (1 - 0.1)) < 1e-6


def test_eval_exact_polynomial():
    one_plus = TruncatedSeries(1, 1, {(0,): 1, (1,): 1})
    one_minus = TruncatedSeries(1, 1, {(0,): 1, (1,): -1})
    prod = one_plus.multiply(one_minus)
    assert prod.coeffs == TruncatedSeries(1, 2, {(0,): 1, (2,): -1}).coeffs
    z = 0.3 + 0.4j
    assert prod.eval((z,)) == 1 - z * z


def test_eval_dimension_mismatch():
    s = TruncatedSeries(2, 1, {(1, 0): 1})
    with pytest.raises(ValueError):
        s.eval((0.1,))


def test_eval_linearity():
    rng = np.random.default_rng(7)
    s1 = random_series(rng, 2, 4)
    s2 = random_series(rng, 2, 4)
    z = (0.3 - 0.2j, -0.1 + 0.25j)
    combo = s1 + 2.5 * s2
    assert abs(combo.eval(z) - (s1.eval(z) + 2.5 * s2.eval(z))) < 1e-12


# -- multiply ------------------------------------------------------------------

def test_multiply_multinomial_square():
    s = TruncatedSeries(2, 1, {(1, 0): 1, (0, 1): 1})
    sq = s.multiply(s)
    assert sq.max_degree == 2
    assert sq.coeffs == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_multiply_cap_truncates():
    s = TruncatedSeries(1, 3, {(0,): 1, (3,): 1})
    capped = s.multiply(s, max_degree=4)
    assert capped.max_degree == 4
    assert capped.coefficient((6,)) == 0
    assert capped.coefficient((3,)) == 2
    full = s.multiply(s)
    assert full.max_degree == 6
    assert full.coefficient((6,)) == 1


def test_multiply_dimension_mismatch():
    with pytest.raises(ValueError):
        TruncatedSeries(1, 1, {(1,): 1}).multiply(TruncatedSeries(2, 1, {(1, 0): 1}))


# -- directional derivative ------------------------------------------------------

def test_direction_validation():
    with pytest.raises(ValueError):
        Direction((0.5, 0.4))  # l1 norm 0.9: rejected, not renormalized
    with pytest.raises(ValueError):
        Direction(())
    u = Direction.uniform(3)
    assert abs(sum(abs(c) for c in u.components) - 1.0) <= 1e-12
    # complex directions on the simplex are fine
    Direction((0.5j, -0.5))


def test_directional_derivative_univariate_mobius():
    # d/dz (a - z)/(1 - a z) = -(1 - a^2)/(1 - a z)^2
    a = 0.5
    s = TruncatedSeries(1, 10, mobius_coeffs(a, 1, 10))
    ds = s.directional_derivative(Direction((1.0,)))
    z = 0.2
    exact = -(1 - a * a) / (1 - a * z) ** 2
    assert abs(ds.eval((z,)) - exact) < 1e-5
    assert ds.max_degree == 9


def test_directional_derivative_leibniz():
    rng = np.random.default_rng(11)
    f = random_series(rng, 2, 3)
    g = random_series(rng, 2, 3)
    u = Direction((0.25, 0.75))
    lhs = f.multiply(g).directional_derivative(u)
    rhs = f.multiply(g.directional_derivative(u)) + g.multiply(f.directional_derivative(u))
    keys = set(lhs.coeffs) | set(rhs.coeffs)
    for alpha in keys:
        assert abs(lhs.coefficient(alpha) - rhs.coefficient(alpha)) < 1e-12


def test_directional_derivative_finite_difference():
    rng = np.random.default_rng(23)
    h = 1e-5
    for n in (1, 2, 3):
        f = random_series(rng, n, 6)
        raw = rng.uniform(-1, 1, size=n) + 1j * rng.uniform(-1, 1, size=n)
        u = Direction(tuple(raw / np.sum(np.abs(raw))))
        z = tuple((rng.uniform(-0.5, 0.5) + 1j * rng.uniform(-0.5, 0.5)) for _ in range(n))
        zp = tuple(zj + h * uj for zj, uj in zip(z, u.components))
        zm = tuple(zj - h * uj for zj, uj in zip(z, u.components))
        fd = (f.eval(zp) - f.eval(zm)) / (2 * h)
        assert abs(f.directional_derivative(u).eval(z) - fd) < 1e-8


def test_directional_derivative_dimension_mismatch():
    s = TruncatedSeries(2, 2, {(1, 1): 1})
    with pytest.raises(ValueError):
        s.directional_derivative(Direction((1.0,)))


# -- power-map composition -------------------------------------------------------

def test_compose_power_map_degree_bookkeeping():
    s = TruncatedSeries(2, 3, {(1, 0): 1, (1, 2): 2})
    g = s.compose_power_map(SchwarzPowerMap(2, 3))
    assert g.max_degree == 9
    assert g.coeffs == {(3, 0): 1, (3, 6): 2}


def test_compose_power_map_value_identity():
    rng = np.random.default_rng(31)
    s = random_series(rng, 2, 4)
    omega = SchwarzPowerMap(2, 2)
    z = (0.4 - 0.3j, 0.2 + 0.5j)
    assert abs(s.compose_power_map(omega).eval(z) - s.eval(omega.apply(z))) < 1e-12


def test_compose_power_map_mobius_oracle():
    # degree-4 truncation of the a=0.5 Mobius map, composed with z -> z^2,
    # evaluated at 0.3: tail is about 3e-7
    a = 0.5
    s = TruncatedSeries(1, 4, mobius_coeffs(a, 1, 4))
    g = s.compose_power_map(SchwarzPowerMap(1, 2))
    w = 0.3 ** 2
    assert abs(g.eval((0.3,)) - (a - w) / (1 - a * w)) < 1e-6


def test_compose_power_map_cap_refused():
    s = TruncatedSeries(1, 4, {(4,): 1})
    with pytest.raises(ValueError):
        s.compose_power_map(SchwarzPowerMap(1, 3), max_degree=10)
    with pytest.raises(ValueError):
        s.compose_power_map(SchwarzPowerMap(2, 2))


def test_schwarz_power_map_validation():
    with pytest.raises(ValueError):
        SchwarzPowerMap(0, 1)
    with pytest.raises(ValueError):
        SchwarzPowerMap(1, 0)
    assert SchwarzPowerMap(2, 3).apply((0.1, 0.2j)) == (0.1 ** 3, (0.2j) ** 3)


# -- Bohr majorant sum -----------------------------------------------------------

def test_bohr_majorant_sum_minus_z():
    s = TruncatedSeries(1, 1, {(1,): -1})
    assert s.bohr_majorant_sum(1 / 3) == pytest.approx(1 / 3, abs=1e-15)


def test_bohr_majorant_sum_geometric_oracle():
    # a + (1 - a^2) sum_{k=1}^{60} a^(k-1) r^k for a = 0.99, r = 1/3;
    # stays strictly below 1
    a, r, D = 0.99, 1 / 3, 60
    s = TruncatedSeries(1, D, mobius_coeffs(a, 1, D))
    oracle = a + (1 - a * a) * sum(a ** (k - 1) * r ** k for k in range(1, D + 1))
    got = s.bohr_majorant_sum(r)
    assert abs(got - oracle) < 1e-12
    assert got < 1.0


def test_bohr_majorant_sum_k_min_tail():
    a, r, D = 0.7, 0.25, 12
    s = TruncatedSeries(1, D, mobius_coeffs(a, 1, D))
    full = s.bohr_majorant_sum(r)
    tail = s.bohr_majorant_sum(r, k_min=2)
    head = a + (1 - a * a) * r  # degrees 0 and 1
    assert abs(full - tail - head) < 1e-13


def test_bohr_majorant_sum_monotone():
    rng = np.random.default_rng(43)
    s = random_series(rng, 2, 5)
    assert s.bohr_majorant_sum(0.2) <= s.bohr_majorant_sum(0.3) + 1e-15
    assert s.bohr_majorant_sum(0.3, k_min=3) <= s.bohr_majorant_sum(0.3, k_min=1) + 1e-15


def test_bohr_majorant_sum_vector_radius_and_errors():
    s = TruncatedSeries(2, 2, {(1, 0): 1, (0, 1): 2})
    assert s.bohr_majorant_sum((0.1, 0.2)) == pytest.approx(0.1 + 0.4, abs=1e-15)
    with pytest.raises(ValueError):
        s.bohr_majorant_sum(-0.1)
    with pytest.raises(ValueError):
        s.bohr_majorant_sum((0.1,))
