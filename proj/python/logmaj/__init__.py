"""Log-majorization, matrix means, and trace-inequality checks.

Thin wrapper over the compiled `_logmaj` extension module.
"""

from ._logmaj import (  # noqa: F401
    araki_equality_probe,
    araki_pair,
    beta_density,
    check_log_majorization,
    check_weak_majorization,
    compound_matrix,
    d_alpha_z,
    eigh,
    equality_block_triple,
    equality_case_check,
    extended_araki,
    fractional_power,
    geometric_mean,
    gt_check,
    gt_log_majorization,
    karcher_mean,
    ky_fan_products,
    lie_trotter_kato,
    log_euclidean_mean,
    matrix_exp,
    matrix_log,
    operator_norm,
    power_mean,
    projection_meet,
    q_alpha_z,
    riemannian_distance,
    run_suite,
    schatten_norm,
    singular_values,
    support_projection,
    taylor_coefficients,
    umegaki,
)

__all__ = [
    "araki_equality_probe",
    "araki_pair",
    "beta_density",
    "check_log_majorization",
    "check_weak_majorization",
    "compound_matrix",
    "d_alpha_z",
    "eigh",
    "equality_block_triple",
    "equality_case_check",
    "extended_araki",
    "fractional_power",
    "geometric_mean",
    "gt_check",
    "gt_log_majorization",
    "karcher_mean",
    "ky_fan_products",
    "lie_trotter_kato",
    "log_euclidean_mean",
    "matrix_exp",
    "matrix_log",
    "operator_norm",
    "power_mean",
    "projection_meet",
    "q_alpha_z",
    "riemannian_distance",
    "run_suite",
    "schatten_norm",
    "singular_values",
    "support_projection",
    "taylor_coefficients",
    "umegaki",
]
