# __init__.py
"""Nystrom determinants and their finite-difference derivatives."""
from fredholm_engine.determinant import (
    DEFAULT_ORDER,
    DetJob,
    DetOptions,
    DetResult,
    airy_cutoff,
    log_q_at,
    log_q_finite_temp,
    log_q_sigma,
    log_tracy_widom,
)
from fredholm_engine.derived import KdvResidual, dlogq_dx_fd, kdv_residual, u_sigma_fd

__all__ = [
    "DEFAULT_ORDER",
    "DetJob",
    "DetOptions",
    "DetResult",
    "KdvResidual",
    "airy_cutoff",
    "dlogq_dx_fd",
    "kdv_residual",
    "log_q_at",
    "log_q_finite_temp",
    "log_q_sigma",
    "log_tracy_widom",
    "u_sigma_fd",
]
