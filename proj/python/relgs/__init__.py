"""Ground states of the pseudo-relativistic nonlinear Schrodinger equation.

Thin re-export of the compiled core; see the package README for the CLI and
file formats.
"""

from relgs._core import (
    BoundsReport,
    DiagnosticsReport,
    EnergyBreakdown,
    Grid,
    GroundStateResult,
    ModelParams,
    SolverConfig,
    apply_operator,
    apply_resolvent,
    bessel_k,
    continuation_m,
    dn_map_check,
    el_residual,
    energy,
    extension_energy_per_mode,
    ground_energy,
    hs_norm_sq,
    kappa_s,
    kernel_constant,
    kernel_value,
    lp_norm,
    nehari_project,
    profile_theta,
    rearrange_decreasing,
    solve_ground_state,
    symbol,
    tent_norms,
    upper_bound_delta,
    weight_integrals,
    __version__,
)

__all__ = [
    "BoundsReport",
    "DiagnosticsReport",
    "EnergyBreakdown",
    "Grid",
    "GroundStateResult",
    "ModelParams",
    "SolverConfig",
    "apply_operator",
    "apply_resolvent",
    "bessel_k",
    "continuation_m",
    "dn_map_check",
    "el_residual",
    "energy",
    "extension_energy_per_mode",
    "ground_energy",
    "hs_norm_sq",
    "kappa_s",
    "kernel_constant",
    "kernel_value",
    "lp_norm",
    "nehari_project",
    "profile_theta",
    "rearrange_decreasing",
    "solve_ground_state",
    "symbol",
    "tent_norms",
    "upper_bound_delta",
    "weight_integrals",
]
