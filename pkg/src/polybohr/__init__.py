"""Sharp Bohr-type radii on the unit polydisc.

Closed-form and root-certified radii for three families of Bohr-type
functionals, the Mobius witness family attaining them, the elementary
polydisc bounds the proofs rest on, and a truncated-series engine that
certifies every closed form independently.
"""

from .bounds import (DEFAULT_SEED, GrowthBound, PhiPsiMode, PhiPsiParams,
                     coefficient_bound_check, derivative_bound,
                     phi_psi_monotone, schwarz_pick_bound,
                     zero_multiplicity_bound_check)
from .extremal import (ExtremalParams, Functional, Witness,
                       WitnessNotFoundError, empirical_radius,
                       extremal_functional, extremal_functional_from_series,
                       extremal_series, majorant_functional,
                       rogosinski_threshold, rogosinski_value,
                       sharpness_witness)
from .mvseries import (DEFAULT_MAX_DEGREE, Direction, MultiIndex,
                       SchwarzPowerMap, TruncatedSeries, multi_indices)
from .radii import (GOLDEN_CONJUGATE, SQRT2_MINUS_1, FunctionalKind,
                    PolyLabel, RadiusProblem, RadiusResult, RhoPolynomial,
                    convex_bound_cubic, convex_rho_closed_form,
                    convex_rho_polynomial, deriv_rho_polynomial,
                    deriv_rho_polynomial_small, deriv_witness_quartic,
                    radius_convex, radius_deriv, radius_for, radius_sq_deriv,
                    solve_unique_positive_root, sq_deriv_rho_polynomial,
                    sq_deriv_rho_polynomial_small)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_SEED",
    "Direction",
    "ExtremalParams",
    "Functional",
    "FunctionalKind",
    "GOLDEN_CONJUGATE",
    "GrowthBound",
    "MultiIndex",
    "PhiPsiMode",
    "PhiPsiParams",
    "PolyLabel",
    "RadiusProblem",
    "RadiusResult",
    "RhoPolynomial",
    "SQRT2_MINUS_1",
    "SchwarzPowerMap",
    "TruncatedSeries",
    "Witness",
    "WitnessNotFoundError",
    "coefficient_bound_check",
    "convex_bound_cubic",
    "convex_rho_closed_form",
    "convex_rho_polynomial",
    "deriv_rho_polynomial",
    "deriv_rho_polynomial_small",
    "deriv_witness_quartic",
    "derivative_bound",
    "empirical_radius",
    "extremal_functional",
    "extremal_functional_from_series",
    "extremal_series",
    "majorant_functional",
    "multi_indices",
    "phi_psi_monotone",
    "radius_convex",
    "radius_deriv",
    "radius_for",
    "radius_sq_deriv",
    "rogosinski_threshold",
    "rogosinski_value",
    "schwarz_pick_bound",
    "sharpness_witness",
    "solve_unique_positive_root",
    "sq_deriv_rho_polynomial",
    "sq_deriv_rho_polynomial_small",
    "zero_multiplicity_bound_check",
]
