"""Angle-operator spectra and entanglement entropies for interval inclusions
on the circle. Thin re-export of the compiled _modent module."""

from ._modent import (  # noqa: F401
    DiagnosticError,
    InputError,
    __version__,
    angle_from_modular,
    arc_indicator_coefficients,
    bose_entropy_normalized,
    closed_form_g_coeffs,
    closed_form_h_coeffs,
    cross_ratio_to_phi,
    entropy_lower_bound,
    fermi_entropy_normalized,
    gamma_entropy,
    gamma_trace,
    hankel_singular_values,
    lambda_entropy,
    lambda_trace,
    modular_from_angle,
    run_pipeline,
    run_pipeline_interval,
    schatten_qnorm,
    subspace_entropy,
    symbol_g,
    symbol_h,
    trace_identities,
    two_dim_check,
    verify_suite,
)
