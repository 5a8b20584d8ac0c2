# __init__.py
"""Gauss-Legendre rules and the real Airy function."""
from quadrature_airy.airy import AiryValue, airy, airy_kernel, airy_kernel_matrix, airy_values
from quadrature_airy.gauss_legendre import QuadratureRule, composite_rule, gauss_legendre, map_rule

__all__ = [
    "AiryValue",
    "QuadratureRule",
    "airy",
    "airy_kernel",
    "airy_kernel_matrix",
    "airy_values",
    "composite_rule",
    "gauss_legendre",
    "map_rule",
]
