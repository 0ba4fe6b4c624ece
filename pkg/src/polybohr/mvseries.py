"""Sparse truncated power series in several complex variables.

A series is stored as a dict mapping exponent tuples alpha to complex
coefficients a_alpha, representing

    f(z) = sum_alpha a_alpha z^alpha,   z^alpha = z_1^a1 * ... * z_n^an,

truncated at a fixed total degree D = max_degree.  Absent keys mean zero and
exact zeros are not stored.  All operations return new objects; nothing
mutates a series in place.

The pieces needed by the Bohr-radius machinery are: point evaluation, Cauchy
products, directional derivatives d_u f = sum_j u_j df/dz_j along unit-l1
directions, substitution of the componentwise power map z_j -> z_j^m, and the
majorant sum  sum_{|alpha| >= k_min} |a_alpha| r^alpha  for radius vectors r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

# default truncation order for series built by callers that do not choose one
DEFAULT_MAX_DEGREE = 24


class MultiIndex(tuple):
    """Exponent tuple of a monomial z^alpha; entries are nonnegative integers."""

    def __new__(cls, exponents: Iterable[int]) -> "MultiIndex":
        ex = tuple(exponents)
        if not ex:
            raise ValueError("a multi-index needs at least one entry")
        for e in ex:
            if e != int(e):
                raise ValueError(f"non-integer exponent {e!r}")
            if e < 0:
                raise ValueError(f"negative exponent {e!r}")
        return super().__new__(cls, (int(e) for e in ex))

    @property
    def n_vars(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        """Total degree |alpha| = alpha_1 + ... + alpha_n."""
        return sum(self)

    @property
    def factorial(self) -> int:
        """alpha! = alpha_1! * ... * alpha_n!, exact (Python integers)."""
        out = 1
        for e in self:
            out *= math.factorial(e)
        return out


def multi_indices(n_vars: int, degree: int) -> Iterator[MultiIndex]:
    """All multi-indices with n_vars entries and total degree exactly `degree`."""
    if n_vars < 1:
        raise ValueError("n_vars must be >= 1")
    if degree < 0:
        raise ValueError("degree must be >= 0")

    def comps(n: int, k: int):
        if n == 1:
            yield (k,)
            return
        for first in range(k + 1):
            for rest in comps(n - 1, k - first):
                yield (first,) + rest

    for t in comps(n_vars, degree):
        yield MultiIndex(t)


@dataclass(frozen=True)
class Direction:
    """Direction u with sum_j |u_j| = 1 (complex entries allowed).

    Vectors off that simplex by more than 1e-12 are rejected; there is no
    silent renormalization.
    """

    components: tuple

    def __post_init__(self):
        comp = tuple(complex(u) for u in self.components)
        if not comp:
            raise ValueError("a direction needs at least one component")
        total = sum(abs(u) for u in comp)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"sum of |u_j| is {total!r}, not 1 within 1e-12")
        object.__setattr__(self, "components", comp)

    @property
    def n_vars(self) -> int:
        return len(self.components)

    @classmethod
    def uniform(cls, n_vars: int) -> "Direction":
        """The direction (1/n, ..., 1/n)."""
        return cls((1.0 / n_vars,) * n_vars)


@dataclass(frozen=True)
class SchwarzPowerMap:
    """The componentwise power map omega(z) = (z_1^m, ..., z_n^m).

    Each component fixes 0 and maps the unit disc into itself, and this is the
    family along which the radius bounds are attained.
    """

    n_vars: int
    power: int

    def __post_init__(self):
        if self.n_vars < 1:
            raise ValueError("n_vars must be >= 1")
        if self.power < 1:
            raise ValueError("power must be >= 1")

    def apply(self, z) -> tuple:
        """omega(z) as a tuple of complex numbers."""
        if len(z) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} coordinates, got {len(z)}")
        m = self.power
        return tuple(complex(v) ** m for v in z)


class TruncatedSeries:
    """Sparse polynomial truncation of a power series in n_vars variables."""

    __slots__ = ("n_vars", "max_degree", "coeffs")

    def __init__(self, n_vars: int, max_degree: int, coeffs: Mapping):
        if n_vars < 1:
            raise ValueError("n_vars must be >= 1")
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        clean = {}
        for alpha, c in coeffs.items():
            idx = alpha if isinstance(alpha, MultiIndex) else MultiIndex(alpha)
            if idx.n_vars != n_vars:
                raise ValueError(f"index {tuple(idx)} has {idx.n_vars} entries, expected {n_vars}")
            if idx.degree > max_degree:
                raise ValueError(f"index {tuple(idx)} exceeds max_degree {max_degree}")
            cv = complex(c)
            if cv != 0:
                clean[idx] = cv
        self.n_vars = n_vars
        self.max_degree = max_degree
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int, max_degree: int) -> "TruncatedSeries":
        return cls(n_vars, max_degree, {})

    @classmethod
    def constant(cls, value, n_vars: int, max_degree: int = 0) -> "TruncatedSeries":
        return cls(n_vars, max_degree, {(0,) * n_vars: value})

    # -- plumbing ----------------------------------------------------------

    def coefficient(self, alpha) -> complex:
        """a_alpha, or 0 if the monomial is absent."""
        idx = alpha if isinstance(alpha, MultiIndex) else MultiIndex(alpha)
        return self.coeffs.get(idx, 0j)

    def degree_slice(self, k: int) -> dict:
        """The homogeneous degree-k part as a dict."""
        return {a: c for a, c in self.coeffs.items() if a.degree == k}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n_vars == other.n_vars
                and self.max_degree == other.max_degree
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        return (f"TruncatedSeries(n_vars={self.n_vars}, "
                f"max_degree={self.max_degree}, terms={len(self.coeffs)})")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.n_vars != self.n_vars:
            raise ValueError("variable count mismatch")
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0j) + c
        return TruncatedSeries(self.n_vars, max(self.max_degree, other.max_degree), out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.multiply(other)
        return TruncatedSeries(self.n_vars, self.max_degree,
                               {a: c * other for a, c in self.coeffs.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    # -- operations --------------------------------------------------------

    def eval(self, z) -> complex:
        """f(z) for a point z with n_vars coordinates."""
        if len(z) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} coordinates, got {len(z)}")
        zs = [complex(v) for v in z]
        # per-variable power tables up to the largest exponent actually used
        top = [0] * self.n_vars
        for alpha in self.coeffs:
            for j, e in enumerate(alpha):
                if e > top[j]:
                    top[j] = e
        pows = []
        for j in range(self.n_vars):
            table = [1 + 0j] * (top[j] + 1)
            for e in range(1, top[j] + 1):
                table[e] = table[e - 1] * zs[j]
            pows.append(table)
        total = 0j
        for alpha, c in self.coeffs.items():
            term = c
            for j, e in enumerate(alpha):
                if e:
                    term *= pows[j][e]
            total += term
        return total

    def multiply(self, other: "TruncatedSeries", max_degree: int | None = None) -> "TruncatedSeries":
        """Cauchy product, truncated at min(D1 + D2, max_degree) when a cap is given."""
        if other.n_vars != self.n_vars:
            raise ValueError("variable count mismatch")
        cap = self.max_degree + other.max_degree
        if max_degree is not None:
            cap = min(cap, max_degree)
        out: dict = {}
        for a, ca in self.coeffs.items():
            da = a.degree
            for b, cb in other.coeffs.items():
                if da + b.degree > cap:
                    continue
                key = MultiIndex(x + y for x, y in zip(a, b))
                out[key] = out.get(key, 0j) + ca * cb
        return TruncatedSeries(self.n_vars, cap, out)

    def directional_derivative(self, u) -> "TruncatedSeries":
        """d_u f = sum_j u_j df/dz_j for a unit-l1 direction u."""
        direction = u if isinstance(u, Direction) else Direction(tuple(u))
        if direction.n_vars != self.n_vars:
            raise ValueError("direction dimension mismatch")
        comp = direction.components
        out: dict = {}
        for alpha, c in self.coeffs.items():
            for j, e in enumerate(alpha):
                if e:
                    down = list(alpha)
                    down[j] = e - 1
                    key = MultiIndex(down)
                    out[key] = out.get(key, 0j) + c * e * comp[j]
        return TruncatedSeries(self.n_vars, max(self.max_degree - 1, 0), out)

    def compose_power_map(self, omega: SchwarzPowerMap, max_degree: int | None = None) -> "TruncatedSeries":
        """Substitute z_j -> z_j^m: the monomial z^alpha becomes z^(m alpha).

        The result has degree m * D.  When an explicit cap is given and m * D
        would exceed it, the composition is refused rather than silently
        truncated.
        """
        if omega.n_vars != self.n_vars:
            raise ValueError("power map dimension mismatch")
        m = omega.power
        new_degree = m * self.max_degree
        if max_degree is not None and new_degree > max_degree:
            raise ValueError(f"composed degree {new_degree} exceeds cap {max_degree}")
        out = {MultiIndex(m * e for e in alpha): c for alpha, c in self.coeffs.items()}
        return TruncatedSeries(self.n_vars, new_degree, out)

    def bohr_majorant_sum(self, r, k_min: int = 0) -> float:
        """sum over |alpha| >= k_min of |a_alpha| r^alpha, for r >= 0.

        r may be a scalar (used for every variable) or a vector of length
        n_vars.  This is the quantity compared against 1 in Bohr-type
        inequalities.
        """
        try:
            rv = [float(x) for x in r]
        except TypeError:
            rv = [float(r)] * self.n_vars
        if len(rv) != self.n_vars:
            raise ValueError(f"expected {self.n_vars} radii, got {len(rv)}")
        for x in rv:
            if x < 0:
                raise ValueError("radii must be nonnegative")
        total = 0.0
        for alpha, c in self.coeffs.items():
            if alpha.degree < k_min:
                continue
            term = abs(c)
            for j, e in enumerate(alpha):
                if e:
                    term *= rv[j] ** e
            total += term
        return total
