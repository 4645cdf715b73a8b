"""Planar restricted three-body problem with radiation, drag, and an
oblate secondary: triangular equilibria, linear stability, and a
second-order normal form around them.

Public API re-exported here; submodules stay importable individually.
"""

__version__ = "0.1.0"

from .errors import (
    InvalidParamsError,
    NanDetectedError,
    NoConvergenceError,
    NoRootError,
    Pr3bpError,
    ResonantDegeneracyError,
    SeriesRangeWarning,
    SingularityError,
    SingularJacobianError,
    UndefinedQuantityError,
)
from .params import (
    DerivedParams,
    SystemParams,
    derive_params,
    mass_reduction_factor,
    oblateness_coeff,
)
from .dynamics import (
    KineState,
    MomentumState,
    eom_field,
    eom_rhs,
    momenta_map,
    potential_gradient,
    potential_u1,
)
from .equilibria import (
    EquilibriumPoint,
    equilibrium_residual,
    locate_series,
    locate_series_linear,
    refine_newton,
)
from .expansion import (
    CubicCoeffs,
    QuadCoeffs,
    cubic_coeffs,
    drag_cubic_t5,
    fd_hessian_oracle,
    fd_third_oracle,
    h2_eval,
    quad_coeffs,
    series_l0_l1,
)
from .stability import (
    CriticalMu,
    Spectrum,
    char_roots,
    classify,
    freq_identity_residuals,
    matrix_a_det,
    mu_crit_numeric,
    mu_crit_series,
    spectral_oracle,
)
from .normalform import (
    ActionAngle,
    NormalFormMap,
    action_angle_map,
    inverse_action_angle,
    j_coeffs,
    lk_factors,
    normal_form_map,
    normal_h2,
    orbit_reconstruct,
    orbit_reconstruct_state,
    reconstruction_residual,
)
from .ledger import LedgerEntry, ledger_as_dicts, standard_ledger
from .report import consistency_report, render_json
from .kernels import backend_name

__all__ = [
    "__version__",
    # errors
    "Pr3bpError", "InvalidParamsError", "SingularityError",
    "NoConvergenceError", "SingularJacobianError", "NoRootError",
    "NanDetectedError", "ResonantDegeneracyError", "UndefinedQuantityError",
    "SeriesRangeWarning",
    # parameters
    "SystemParams", "DerivedParams", "derive_params",
    "mass_reduction_factor", "oblateness_coeff",
    # dynamics
    "KineState", "MomentumState", "potential_u1", "potential_gradient",
    "eom_rhs", "eom_field", "momenta_map",
    # equilibria
    "EquilibriumPoint", "locate_series", "locate_series_linear",
    "equilibrium_residual", "refine_newton",
    # expansion
    "QuadCoeffs", "CubicCoeffs", "quad_coeffs", "cubic_coeffs",
    "drag_cubic_t5", "series_l0_l1", "h2_eval",
    "fd_hessian_oracle", "fd_third_oracle",
    # stability
    "Spectrum", "CriticalMu", "char_roots", "matrix_a_det",
    "mu_crit_series", "mu_crit_numeric", "freq_identity_residuals",
    "spectral_oracle", "classify",
    # normal form
    "NormalFormMap", "ActionAngle", "lk_factors", "j_coeffs",
    "normal_form_map", "action_angle_map", "inverse_action_angle",
    "normal_h2", "orbit_reconstruct", "orbit_reconstruct_state",
    "reconstruction_residual",
    # ledger / report / backend
    "LedgerEntry", "standard_ledger", "ledger_as_dicts",
    "consistency_report", "render_json", "backend_name",
]
