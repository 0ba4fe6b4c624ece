"""Witness family and Bohr-type functionals on the polydisc.

The single family behind every sharpness statement here is

    f_a(z) = (a - s) / (1 - a s),    s = z_1 + ... + z_n,   a in [0, 1),

restricted to the simplex-slice |z_1| + ... + |z_n| < 1 of the polydisc.  Its
expansion has constant term a and, for |alpha| = k >= 1, coefficient
-(1 - a^2) a^(k-1) k!/alpha!.  Evaluating the functionals on f_a composed
with the power map z_j -> z_j^m at the aligned point z_j = r e^(-i pi / m)
produces closed forms in a and rho = n r^m:

    CONVEX    t (rho+a)/(1+a rho) + (1-t) [a + (1-a^2) rho / (1-a rho)]
    DERIV     (rho+a)/(1+a rho) + (1-a^2) rho/(1+a rho)^2
                + lam (1-a^2) a rho^2 / (1-a rho)
    SQ_DERIV  the same with the first term squared

The majorant forms (upper-bound chains valid for every self-map with
|f(0)| = a0) dominate these exactly, and the value crosses 1 for some a
precisely when rho exceeds the family threshold.  empirical_radius recovers
radii by bisecting that crossing; sharpness_witness exhibits an explicit a
just beyond a stated radius, where one exists.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .mvseries import (DEFAULT_MAX_DEGREE, Direction, SchwarzPowerMap,
                       TruncatedSeries, multi_indices)
from .radii import (GOLDEN_CONJUGATE, SQRT2_MINUS_1, FunctionalKind,
                    RadiusProblem, radius_for)

# sup-over-grid crossing guard: a radius is "crossed" only when the grid sup
# exceeds 1 by more than this
CROSSING_TOL = 1e-12

_TAIL_GRID_DEPTH = 30  # log-spaced points 1 - 2^-k appended near a = 1


class WitnessNotFoundError(RuntimeError):
    """Raised when no witness parameter pushes the functional above 1."""


@dataclass(frozen=True)
class Functional:
    """A Bohr-type functional: kind plus its weight (t or lam)."""

    kind: FunctionalKind
    t: float | None = None
    lam: float | None = None

    def __post_init__(self):
        if self.kind is FunctionalKind.CONVEX:
            if self.t is None or self.lam is not None:
                raise ValueError("CONVEX takes t only")
            if not 0.0 <= self.t <= 1.0:
                raise ValueError(f"t must lie in [0, 1], got {self.t!r}")
        else:
            if self.lam is None or self.t is not None:
                raise ValueError(f"{self.kind.value} takes lam only")
            if not self.lam > 0.0:
                raise ValueError(f"lam must be positive, got {self.lam!r}")

    @classmethod
    def convex(cls, t: float) -> "Functional":
        return cls(FunctionalKind.CONVEX, t=t)

    @classmethod
    def deriv(cls, lam: float) -> "Functional":
        return cls(FunctionalKind.DERIV, lam=lam)

    @classmethod
    def sq_deriv(cls, lam: float) -> "Functional":
        return cls(FunctionalKind.SQ_DERIV, lam=lam)

    @classmethod
    def from_problem(cls, problem: RadiusProblem) -> "Functional":
        return cls(problem.kind, t=problem.t, lam=problem.lam)


@dataclass(frozen=True)
class ExtremalParams:
    """Witness-family parameters: a in [0, 1), variable count n, power m."""

    a: float
    n: int
    m: int

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise ValueError(f"a must lie in [0, 1), got {self.a!r}")
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be >= 1")


@dataclass(frozen=True)
class Witness:
    """A certified witness: functional value strictly above 1 at (a, rho)."""

    a: float
    value: float
    rho: float
    functional: Functional

    def __post_init__(self):
        if not self.value > 1.0:
            raise ValueError(f"witness value must exceed 1, got {self.value!r}")


# -- the witness family as a series -------------------------------------------

def extremal_series(params: ExtremalParams,
                    max_degree: int = DEFAULT_MAX_DEGREE) -> TruncatedSeries:
    """Truncated expansion of f_a(z) = (a - s)/(1 - a s), s = z_1 + ... + z_n.

    Constant term a; coefficient of z^alpha for |alpha| = k >= 1 is
    -(1 - a^2) a^(k-1) k!/alpha!, so each homogeneous slice sums in modulus
    to (1 - a^2) a^(k-1) n^k.
    """
    a, n = params.a, params.n
    coeffs: dict = {(0,) * n: complex(a)}
    one_minus = 1.0 - a * a
    for k in range(1, max_degree + 1):
        base = -one_minus * a ** (k - 1)
        kfac = math.factorial(k)
        for alpha in multi_indices(n, k):
            coeffs[alpha] = complex(base * (kfac // alpha.factorial))
    return TruncatedSeries(n, max_degree, coeffs)


# -- closed-form functional values --------------------------------------------

def _functional_value(func: Functional, a, rho):
    """Witness-family value; works elementwise on numpy arrays of a."""
    first = (rho + a) / (1.0 + a * rho)
    if func.kind is FunctionalKind.CONVEX:
        t = func.t
        return t * first + (1.0 - t) * (a + (1.0 - a * a) * rho / (1.0 - a * rho))
    second = (1.0 - a * a) * rho / (1.0 + a * rho) ** 2
    tail = func.lam * (1.0 - a * a) * a * rho * rho / (1.0 - a * rho)
    if func.kind is FunctionalKind.DERIV:
        return first + second + tail
    return first * first + second + tail


def extremal_functional(func: Functional, a: float, rho: float) -> float:
    """Exact functional value for the witness family at parameter a.

    At a = 0 every kind reduces to rho (CONVEX) or 2 rho (DERIV) style
    elementary values; as a -> 1 the value tends to 1 from whichever side the
    sign of the witness quartic dictates.
    """
    if not 0.0 <= a < 1.0:
        raise ValueError(f"a must lie in [0, 1), got {a!r}")
    if rho < 0.0:
        raise ValueError(f"rho must be nonnegative, got {rho!r}")
    if a * rho >= 1.0:
        raise ValueError(f"need a * rho < 1, got {a * rho!r}")
    return float(_functional_value(func, a, rho))


def majorant_functional(func: Functional, a0: float, rho: float) -> float:
    """Upper-bound chain value for any self-map with |f(0)| = a0.

    CONVEX:    t (rho+a0)/(1+a0 rho) + (1-t) [a0 + (1-a0^2) rho / (1-rho)]
               for rho < 1;
    DERIV:     (rho+a0)/(1+a0 rho) + rho (1-a0^2)/(1+a0 rho)^2
               + lam (1-a0^2) rho^2/(1-rho)       for rho <= sqrt(2)-1;
    SQ_DERIV:  the same with the first term squared, for rho <= (sqrt(5)-1)/2.

    At a0 = 1 each chain collapses to exactly 1.0 in floating point, which the
    tests assert literally.
    """
    if not 0.0 <= a0 <= 1.0:
        raise ValueError(f"a0 must lie in [0, 1], got {a0!r}")
    if rho < 0.0:
        raise ValueError(f"rho must be nonnegative, got {rho!r}")
    first = (rho + a0) / (1.0 + a0 * rho)
    if func.kind is FunctionalKind.CONVEX:
        if rho >= 1.0:
            raise ValueError(f"CONVEX majorant needs rho < 1, got {rho!r}")
        t = func.t
        return t * first + (1.0 - t) * (a0 + (1.0 - a0 * a0) * rho / (1.0 - rho))
    cap = SQRT2_MINUS_1 if func.kind is FunctionalKind.DERIV else GOLDEN_CONJUGATE
    if rho > cap:
        raise ValueError(f"{func.kind.value} majorant needs rho <= {cap!r}, got {rho!r}")
    second = rho * (1.0 - a0 * a0) / (1.0 + a0 * rho) ** 2
    tail = func.lam * (1.0 - a0 * a0) * rho * rho / (1.0 - rho)
    if func.kind is FunctionalKind.DERIV:
        return first + second + tail
    return first * first + second + tail


# -- series-route evaluation (independent of the closed forms) ----------------

def extremal_functional_from_series(func: Functional, params: ExtremalParams,
                                    rho: float, max_degree: int = 40) -> float:
    """Functional value computed through the series machinery alone.

    Builds the truncated expansion of f_a, composes with z_j -> z_j^m,
    evaluates at the aligned point z_j = r e^(-i pi/m) with rho = n r^m, and
    assembles the functional from |g(z)|, the directional derivative along
    (1/n, ..., 1/n), and majorant sums.  Agreement with extremal_functional
    certifies the closed forms; the truncation error decays like (a rho)^D.
    """
    a, n, m = params.a, params.n, params.m
    if rho < 0.0 or a * rho >= 1.0:
        raise ValueError(f"need 0 <= rho and a * rho < 1, got a={a!r}, rho={rho!r}")
    r = (rho / n) ** (1.0 / m)
    f = extremal_series(params, max_degree=max_degree)
    omega = SchwarzPowerMap(n, m)
    g = f.compose_power_map(omega)
    z = tuple(r * cmath.exp(-1j * math.pi / m) for _ in range(n))
    w = omega.apply(z)  # each coordinate is exactly -r^m
    first = abs(g.eval(z))
    if func.kind is FunctionalKind.CONVEX:
        return func.t * first + (1.0 - func.t) * g.bohr_majorant_sum(r, k_min=0)
    du = f.directional_derivative(Direction.uniform(n))
    # the derivative term carries n * ||omega(z)||_inf = n r^m = rho; the
    # radii are exact under this polydisc normalization
    second = abs(du.eval(w)) * (n * abs(w[0]))
    tail = g.bohr_majorant_sum(r, k_min=2 * m)
    head = first * first if func.kind is FunctionalKind.SQ_DERIV else first
    return head + second + func.lam * tail


# -- parameter grids and searches ----------------------------------------------

def _a_grid(count: int) -> np.ndarray:
    """Uniform grid on [0, 1) plus log-spaced points 1 - 2^-k near 1.

    The functionals approach 1 as a -> 1 with slope proportional to (1 - a),
    so witnesses often live at a within 1e-3 of 1; the tail resolves them.
    """
    base = np.linspace(0.0, 1.0, count, endpoint=False)
    tail = 1.0 - np.power(2.0, -np.arange(1, _TAIL_GRID_DEPTH + 1, dtype=float))
    return np.unique(np.concatenate([base, tail]))


def _golden_max(fn, lo: float, hi: float, tol: float = 1e-12):
    """Golden-section maximum of a unimodal-enough fn on [lo, hi]."""
    g = GOLDEN_CONJUGATE
    c = hi - g * (hi - lo)
    d = lo + g * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > tol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - g * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + g * (hi - lo)
            fd = fn(d)
    if fc >= fd:
        return c, fc
    return d, fd


def sharpness_witness(problem: RadiusProblem, delta: float = 1e-3,
                      grid: int = 512) -> Witness:
    """An explicit witness just beyond the stated radius, where one exists.

    Searches a in [0, 1) at rho = (1 + delta) * rho_root: first a coarse grid
    with a log tail toward 1, then a golden-section refinement around the
    best grid point.  Returns the first parameter whose functional value
    exceeds 1.  On the small-weight DERIV / SQ_DERIV branches the family
    stays at or below 1 past the stated radius and the search raises
    WitnessNotFoundError; that reflects the functionals, not a search gap.
    """
    if delta <= 0.0:
        raise ValueError(f"delta must be positive, got {delta!r}")
    result = radius_for(problem)
    rho = (1.0 + delta) * result.rho_root
    func = Functional.from_problem(problem)
    avals = _a_grid(grid)
    vals = _functional_value(func, avals, rho)
    above = np.nonzero(vals > 1.0)[0]
    if above.size:
        i = int(above[0])
        return Witness(float(avals[i]), float(vals[i]), rho, func)
    j = int(np.argmax(vals))
    lo = float(avals[max(j - 1, 0)])
    hi = float(avals[min(j + 1, len(avals) - 1)])
    a_best, v_best = _golden_max(lambda a: _functional_value(func, a, rho), lo, hi)
    if v_best > 1.0:
        return Witness(float(a_best), float(v_best), rho, func)
    raise WitnessNotFoundError(
        f"no witness up to a = {float(avals[-1])!r} for {func.kind.value} at rho = {rho!r} "
        f"(grid+refined sup = {max(float(np.max(vals)), float(v_best))!r})")


_SEARCH_RHO_MAX = {
    FunctionalKind.CONVEX: 1.0 - 1e-9,
    FunctionalKind.DERIV: SQRT2_MINUS_1,
    FunctionalKind.SQ_DERIV: GOLDEN_CONJUGATE,
}


def _sup_crosses(func: Functional, avals: np.ndarray, rho: float) -> bool:
    return float(np.max(_functional_value(func, avals, rho))) > 1.0 + CROSSING_TOL


def empirical_radius(problem: RadiusProblem, a_grid: int = 512,
                     tol: float = 1e-7) -> float:
    """Radius recovered by bisecting the sup-over-a crossing of 1.

    Bisects rho over the kind's admissible interval until the bracket is
    narrower than tol, testing sup_a(functional) > 1 + 1e-12 on an a-grid of
    `a_grid` uniform points plus the log tail; returns r = (rho/n)^(1/m).
    This measures the witness family's true threshold: it matches the stated
    radius on the sharp branches (all t; lam > 1/2 for DERIV, lam > 1 for
    SQ_DERIV) and exceeds it on the small-weight branches.
    """
    if a_grid < 100:
        raise ValueError(f"a_grid must be >= 100, got {a_grid!r}")
    if tol < 1e-10:
        raise ValueError(f"tol must be >= 1e-10, got {tol!r}")
    func = Functional.from_problem(problem)
    avals = _a_grid(a_grid)
    lo = 1e-9
    hi = _SEARCH_RHO_MAX[func.kind]
    if _sup_crosses(func, avals, lo):
        raise ValueError(f"threshold not bracketed: crossing already at rho = {lo!r}")
    if not _sup_crosses(func, avals, hi):
        raise ValueError(
            f"threshold not bracketed: no crossing up to rho = {hi!r} "
            f"for {func.kind.value} with weight {func.t if func.t is not None else func.lam!r}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _sup_crosses(func, avals, mid):
            hi = mid
        else:
            lo = mid
    rho_star = 0.5 * (lo + hi)
    if problem.m == 1:
        return rho_star / problem.n
    return (rho_star / problem.n) ** (1.0 / problem.m)


# -- one-variable Bohr-Rogosinski thresholds -----------------------------------

def rogosinski_value(a: float, rho: float, squared: bool = False) -> float:
    """One-variable witness value |f_a| + full majorant tail at radius rho.

    head + (1 - a^2) rho / (1 - a rho), where head is (rho+a)/(1+a rho) or
    its square.  The sup over a crosses 1 at rho = sqrt(5) - 2 (linear head)
    and rho = 1/3 (squared head).
    """
    if not 0.0 <= a < 1.0:
        raise ValueError(f"a must lie in [0, 1), got {a!r}")
    if rho < 0.0 or a * rho >= 1.0:
        raise ValueError(f"need 0 <= rho and a * rho < 1, got {rho!r}")
    return float(_rogosinski_value(a, rho, squared))


def _rogosinski_value(a, rho, squared: bool):
    head = (rho + a) / (1.0 + a * rho)
    if squared:
        head = head * head
    return head + (1.0 - a * a) * rho / (1.0 - a * rho)


def rogosinski_threshold(squared: bool = False, a_grid: int = 512,
                         tol: float = 1e-7) -> float:
    """Empirical crossing radius for the one-variable functional above."""
    if a_grid < 100:
        raise ValueError(f"a_grid must be >= 100, got {a_grid!r}")
    if tol < 1e-10:
        raise ValueError(f"tol must be >= 1e-10, got {tol!r}")
    avals = _a_grid(a_grid)

    def crosses(rho: float) -> bool:
        return float(np.max(_rogosinski_value(avals, rho, squared))) > 1.0 + CROSSING_TOL

    lo, hi = 1e-9, 0.8
    if not crosses(hi):
        raise ValueError("threshold not bracketed below rho = 0.8")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if crosses(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
