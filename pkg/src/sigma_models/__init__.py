# __init__.py
"""Admissible deformation weights and their constants."""
from sigma_models.assumptions import AssumptionReport, CheckOutcome, check_assumptions
from sigma_models.model_file import load_model, parse_model_text
from sigma_models.models import (
    LaplaceMeasureSpec,
    ModelConstants,
    ModelKind,
    SigmaModel,
    build_model,
    j_sigma,
    kpz_constants,
    laplace_from_pairs,
    make_cutoff_model,
    make_kpz_model,
    make_laplace_model,
    make_zero_model,
    model_constants,
)

__all__ = [
    "AssumptionReport",
    "CheckOutcome",
    "LaplaceMeasureSpec",
    "ModelConstants",
    "ModelKind",
    "SigmaModel",
    "build_model",
    "check_assumptions",
    "j_sigma",
    "kpz_constants",
    "laplace_from_pairs",
    "load_model",
    "make_cutoff_model",
    "make_kpz_model",
    "make_laplace_model",
    "make_zero_model",
    "model_constants",
    "parse_model_text",
]
