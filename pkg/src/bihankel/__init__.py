"""Second-Hankel-determinant machinery for bi-starlike and bi-convex maps.

The package reconstructs the coefficient system behind the closed-form
bounds on |a2 a4 - a3^2| for bi-starlike and bi-convex functions of order
beta, evaluates every bound, profile and critical point in closed form, and
confirms each one against independent oracles: truncated-series algebra,
grid maximization, and seeded sampling of the underlying coefficient class.
"""

from .bounds import (
    BoundResult,
    Branch,
    QuarticProfile,
    Thresholds,
    convex_h22_bound,
    convex_surrogate_terms,
    corner_value,
    critical_point,
    fekete_szego_bound,
    h22_bound,
    quartic_profile,
    starlike_h22_bound,
    starlike_surrogate_terms,
    surrogate_surface,
    surrogate_terms,
    thresholds,
)
from .caratheodory import (
    DiskParams,
    HerglotzMeasure,
    PCoefficients,
    coeffs_from_disk_params,
    coeffs_from_herglotz,
    p_coefficients_from_herglotz,
    rotate_to_real,
    sample_disk_params,
    sample_herglotz_measures,
    validate_p,
    x_from_c2,
)
from .errors import (
    BihankelError,
    ConstraintViolation,
    DomainError,
    InsufficientCoefficients,
    NotNormalized,
    VerificationFailure,
    ZeroConstantTerm,
)
from .functionals import (
    BiCoefficients,
    FamilyId,
    Order,
    SystemReport,
    fekete_szego,
    hankel_2_2,
    hankel_matrix_det,
    reconstruct,
    series_from_bicoefficients,
    verify_coefficient_system,
)
from .optimizer import (
    GridSpec,
    SearchResult,
    empirical_max_h22,
    h22_from_params,
    inverse_side_coeffs,
    maximize_1d,
    maximize_surrogate,
    maximize_unit_square,
)
from .series import (
    TruncatedSeries,
    compose,
    convex_functional,
    divide,
    invert_composition,
    max_coeff_diff,
    multiply,
    starlike_functional,
)
from .verification import CheckResult, all_passed, run_checks

__version__ = "0.1.0"
