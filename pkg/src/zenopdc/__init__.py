"""Photon-pair generation in a nonlinear coupler with a probed idler.

A pump-driven parametric process converts pump photons into signal/idler
pairs while the idler exchanges excitations with an auxiliary probe mode.
The package propagates the resulting linear mode-mixing dynamics exactly
(matrix exponential), numerically (independent ODE integration), and in a
rotated "dressed" basis, extracts Bogoliubov (U, V) blocks and vacuum-seeded
occupations, evaluates closed-form limits, classifies dynamical regimes from
the characteristic cubic, and scans parameter grids for the suppression
(Zeno) and revival (anti-Zeno) features of the signal yield.
"""

from .closed_forms import (
    BRANCH_HYPERBOLIC,
    BRANCH_THRESHOLD,
    BRANCH_TRIG,
    ClosedFormResult,
    coupled_matched_occupations,
    n_s_coupled_matched,
    n_s_large_mismatch_asymptote,
    n_s_matched,
    n_s_mismatched_uncoupled,
    n_s_strong_coupling_asymptote,
)
from .dressed import (
    DRESSED_MODES,
    DressedParams,
    build_dressed_generator,
    dressed_bogoliubov_map,
    propagate_dressed,
    qpm_comparison,
    resonant_vs_qpm,
    to_dressed,
)
from .dynamics import (
    EIG_COND_LIMIT,
    MODES,
    BogoliubovMap,
    ModeOccupations,
    build_generator,
    check_symplectic,
    compose,
    propagate_exact,
    propagate_ode,
    vacuum_occupations,
)
from .params import (
    BoundaryNotFoundError,
    CouplerError,
    CouplerParams,
    DomainError,
    FlatLandscapeWarning,
    IntegrationError,
    InvalidParameterError,
    NumericError,
    require_finite,
)
from .regimes import (
    REGIME_BOUNDARY,
    REGIME_HYPERBOLIC,
    REGIME_OSCILLATORY,
    CubicCoefficients,
    RegimeReport,
    boundary_exact,
    characteristic_cubic,
    classify_regime,
    cubic_discriminant,
    discriminant_tolerance,
    discriminant_weak_gamma,
    regime_boundaries,
)
from .sweeps import (
    ENGINE_CLOSED_WHEN_APPLICABLE,
    ENGINE_NUMERIC,
    ENGINES,
    PARAM_AXES,
    TAG_CLOSED,
    TAG_FAILED,
    TAG_NUMERIC,
    RidgePoint,
    SweepAxis,
    SweepGrid,
    SweepSpec,
    find_anti_zeno_ridge,
    max_signal_over_length,
    ridge_linearity,
    sweep_2d,
)

__version__ = "0.1.0"

__all__ = [
    "BRANCH_HYPERBOLIC",
    "BRANCH_THRESHOLD",
    "BRANCH_TRIG",
    "BogoliubovMap",
    "BoundaryNotFoundError",
    "ClosedFormResult",
    "CouplerError",
    "CouplerParams",
    "CubicCoefficients",
    "DRESSED_MODES",
    "DomainError",
    "DressedParams",
    "EIG_COND_LIMIT",
    "ENGINE_CLOSED_WHEN_APPLICABLE",
    "ENGINE_NUMERIC",
    "ENGINES",
    "FlatLandscapeWarning",
    "IntegrationError",
    "InvalidParameterError",
    "MODES",
    "ModeOccupations",
    "NumericError",
    "PARAM_AXES",
    "REGIME_BOUNDARY",
    "REGIME_HYPERBOLIC",
    "REGIME_OSCILLATORY",
    "RegimeReport",
    "RidgePoint",
    "SweepAxis",
    "SweepGrid",
    "SweepSpec",
    "TAG_CLOSED",
    "TAG_FAILED",
    "TAG_NUMERIC",
    "boundary_exact",
    "build_dressed_generator",
    "build_generator",
    "characteristic_cubic",
    "check_symplectic",
    "classify_regime",
    "compose",
    "coupled_matched_occupations",
    "cubic_discriminant",
    "discriminant_tolerance",
    "discriminant_weak_gamma",
    "dressed_bogoliubov_map",
    "find_anti_zeno_ridge",
    "max_signal_over_length",
    "n_s_coupled_matched",
    "n_s_large_mismatch_asymptote",
    "n_s_matched",
    "n_s_mismatched_uncoupled",
    "n_s_strong_coupling_asymptote",
    "propagate_dressed",
    "propagate_exact",
    "propagate_ode",
    "qpm_comparison",
    "regime_boundaries",
    "require_finite",
    "resonant_vs_qpm",
    "ridge_linearity",
    "sweep_2d",
    "to_dressed",
    "vacuum_occupations",
    "__version__",
]
