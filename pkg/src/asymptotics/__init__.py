# __init__.py
"""Closed-form large-x and small-t expansions of u and log Q."""
from asymptotics.expansions import (
    AsymptoticEval,
    consistency_identities,
    logq_asymptotic,
    logq_kpz_asymptotic,
    scaled_y,
    u_asymptotic,
)
from asymptotics.shapes import big_f1, big_f2, big_f3, shape_a0, shape_a1, shape_a2
from asymptotics.small_time import (
    REGIMES,
    ZETA_PRIME_MINUS_ONE,
    classify_regime,
    deep_tail_partial,
    gluing_residual,
    tw_tail,
)

__all__ = [
    "AsymptoticEval",
    "REGIMES",
    "ZETA_PRIME_MINUS_ONE",
    "big_f1",
    "big_f2",
    "big_f3",
    "classify_regime",
    "consistency_identities",
    "deep_tail_partial",
    "gluing_residual",
    "logq_asymptotic",
    "logq_kpz_asymptotic",
    "scaled_y",
    "shape_a0",
    "shape_a1",
    "shape_a2",
    "tw_tail",
    "u_asymptotic",
]
