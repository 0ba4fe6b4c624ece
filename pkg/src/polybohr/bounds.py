"""Pointwise bounds for self-maps of the polydisc into the closed unit disc.

These are the elementary estimates the radius proofs lean on, packaged as
checkable evaluators:

- growth:          |f(z)| <= (|a_0| + s)/(1 + |a_0| s)        for ||z||_inf <= s
- derivatives:     |D^alpha f(z)| <= alpha! (1 - |f(z)|^2) (1+s)^(|alpha|-N) / (1-s^2)^|alpha|
                   where N is the number of nonzero entries of alpha
- coefficients:    |a_alpha| <= 1 - |a_0|^2                   for |alpha| >= 1
- zero order:      |f(z)| <= ||z||_inf^k  when f vanishes to order k at 0
- weight transfer: phi(x) = x + A(1-x^2) is nondecreasing on [0,1] for A <= 1/2,
                   psi(x) = x^2 + A(1-x^2) for A <= 1

Each evaluator validates its hypotheses and refuses out-of-range inputs
instead of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .mvseries import MultiIndex, TruncatedSeries

DEFAULT_SEED = 1234

# slack for floating-point comparisons in the checkers
_CHECK_TOL = 1e-12


@dataclass(frozen=True)
class GrowthBound:
    """Growth estimate parameters: center modulus a0 and sup-norm radius s."""

    a0: float
    s: float

    def __post_init__(self):
        if not 0.0 <= self.a0 <= 1.0:
            raise ValueError(f"a0 must lie in [0, 1], got {self.a0!r}")
        if not 0.0 <= self.s < 1.0:
            raise ValueError(f"s must lie in [0, 1), got {self.s!r}")

    def value(self) -> float:
        return schwarz_pick_bound(self.a0, self.s)


class PhiPsiMode(Enum):
    PHI = "phi"
    PSI = "psi"


@dataclass(frozen=True)
class PhiPsiParams:
    """Weight A and comparison points x <= x0 for the monotonicity check."""

    A: float
    x: float
    x0: float

    def __post_init__(self):
        if self.A < 0.0:
            raise ValueError(f"A must be nonnegative, got {self.A!r}")
        if not 0.0 <= self.x <= self.x0 <= 1.0:
            raise ValueError(f"need 0 <= x <= x0 <= 1, got x={self.x!r}, x0={self.x0!r}")


def schwarz_pick_bound(a0: float, s: float) -> float:
    """Sharp growth bound (a0 + s)/(1 + a0 s) for |f| on ||z||_inf <= s.

    Here a0 = |f(0)| in [0, 1] and s in [0, 1).  The bound is attained by
    Mobius maps of one aligned variable, which is what makes it useful as a
    test oracle.
    """
    if not 0.0 <= a0 <= 1.0:
        raise ValueError(f"a0 must lie in [0, 1], got {a0!r}")
    if not 0.0 <= s < 1.0:
        raise ValueError(f"s must lie in [0, 1), got {s!r}")
    return (a0 + s) / (1.0 + a0 * s)


def derivative_bound(a_fz: float, s: float, alpha) -> float:
    """Bound for |D^alpha f(z)| at a point with ||z||_inf <= s.

    a_fz = |f(z)| in [0, 1].  With d = |alpha| and N the number of nonzero
    entries of alpha, the bound is

        alpha! * (1 - a_fz^2) * (1 + s)^(d - N) / (1 - s^2)^d.

    The bound diverges as s -> 1, so s >= 1 is refused.
    """
    idx = alpha if isinstance(alpha, MultiIndex) else MultiIndex(alpha)
    if idx.degree < 1:
        raise ValueError("alpha must have total degree >= 1")
    if not 0.0 <= a_fz <= 1.0:
        raise ValueError(f"a_fz must lie in [0, 1], got {a_fz!r}")
    if not 0.0 <= s < 1.0:
        raise ValueError(f"s must lie in [0, 1), got {s!r}")
    d = idx.degree
    nonzero = sum(1 for e in idx if e)
    return idx.factorial * (1.0 - a_fz * a_fz) * (1.0 + s) ** (d - nonzero) / (1.0 - s * s) ** d


def coefficient_bound_check(series: TruncatedSeries) -> list:
    """Indices alpha with |alpha| >= 1 violating |a_alpha| <= 1 - |a_0|^2.

    Returns the violating multi-indices (empty list means the series is
    consistent with being a self-map of the polydisc into the closed disc,
    as far as this necessary condition can tell).
    """
    a0 = abs(series.coefficient((0,) * series.n_vars))
    if a0 > 1.0 + _CHECK_TOL:
        raise ValueError(f"|a_0| = {a0!r} exceeds 1; not a map into the closed disc")
    cap = 1.0 - a0 * a0
    bad = [alpha for alpha, c in series.coeffs.items()
           if alpha.degree >= 1 and abs(c) > cap + _CHECK_TOL]
    bad.sort()
    return bad


def zero_multiplicity_bound_check(series: TruncatedSeries, k: int,
                                  samples: int = 10_000,
                                  seed: int = DEFAULT_SEED) -> float:
    """Max of |f(z)| / ||z||_inf^k over random points of the open polydisc.

    Requires the series to vanish to order k at 0 (no nonzero coefficient of
    total degree below k).  For an actual self-map into the closed unit disc
    the ratio never exceeds 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    low = [alpha for alpha in series.coeffs if alpha.degree < k]
    if low:
        raise ValueError(f"series does not vanish to order {k}: found {tuple(low[0])}")
    rng = np.random.default_rng(seed)
    n = series.n_vars
    worst = 0.0
    for _ in range(samples):
        radii = rng.uniform(1e-6, 1.0 - 1e-12, size=n)
        angles = rng.uniform(0.0, 2.0 * np.pi, size=n)
        z = tuple(r * complex(np.cos(t), np.sin(t)) for r, t in zip(radii, angles))
        ratio = abs(series.eval(z)) / float(np.max(radii)) ** k
        if ratio > worst:
            worst = ratio
    return worst


def phi_psi_monotone(params: PhiPsiParams, mode: PhiPsiMode) -> bool:
    """Whether the weighted comparison phi(x) <= phi(x0) (resp. psi) holds.

    phi(x) = x + A (1 - x^2) with A <= 1/2, psi(x) = x^2 + A (1 - x^2) with
    A <= 1; outside those ranges monotonicity genuinely fails and the call is
    refused.  The comparison carries a 1e-12 guard so that equal endpoints do
    not flap on rounding.
    """
    A, x, x0 = params.A, params.x, params.x0
    if mode is PhiPsiMode.PHI:
        if A > 0.5:
            raise ValueError(f"phi is only monotone for A <= 1/2, got A={A!r}")
        lo = x + A * (1.0 - x * x)
        hi = x0 + A * (1.0 - x0 * x0)
    elif mode is PhiPsiMode.PSI:
        if A > 1.0:
            raise ValueError(f"psi is only monotone for A <= 1, got A={A!r}")
        lo = x * x + A * (1.0 - x * x)
        hi = x0 * x0 + A * (1.0 - x0 * x0)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return lo <= hi + _CHECK_TOL
