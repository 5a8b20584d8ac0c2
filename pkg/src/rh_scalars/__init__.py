# __init__.py
"""Scalar coefficients of the steepest-descent analysis in both xt regimes."""
from rh_scalars.endpoint_quadrature import EndpointRule, endpoint_rule
from rh_scalars.large_xt import (
    EndpointBounds,
    EndpointSolution,
    dlogq_dx_large,
    endpoint_a_expansion,
    endpoint_bounds,
    endpoint_function,
    f_coeffs_large,
    f_ratio_limit,
    g1_large,
    solve_endpoint_a,
    u_from_endpoint,
    v_norms,
    x2g_expansion,
)
from rh_scalars.small_xt import (
    RHScalars,
    alpha_endpoint,
    chi,
    conformal_map_small,
    d1,
    dlogq_dx_small,
    evaluate_small_xt,
    f_coeffs_small,
    g1_small,
    u_small_xt,
    v_function,
    w_function,
)

__all__ = [
    "EndpointBounds",
    "EndpointRule",
    "EndpointSolution",
    "RHScalars",
    "alpha_endpoint",
    "chi",
    "conformal_map_small",
    "d1",
    "dlogq_dx_large",
    "dlogq_dx_small",
    "endpoint_a_expansion",
    "endpoint_bounds",
    "endpoint_function",
    "endpoint_rule",
    "evaluate_small_xt",
    "f_coeffs_large",
    "f_coeffs_small",
    "f_ratio_limit",
    "g1_large",
    "g1_small",
    "solve_endpoint_a",
    "u_from_endpoint",
    "u_small_xt",
    "v_function",
    "v_norms",
    "w_function",
    "x2g_expansion",
]
