# __init__.py
"""Lower-tail bounds for the narrow-wedge KPZ equation."""
from kpz_tails.tails import (
    TAIL_REGIMES,
    TailBound,
    big_g,
    compare_g_with_determinant,
    coordinates,
    inverse_coordinates,
    lower_bound_log_prob,
    optimal_upper_bound,
    regime_expansion,
    tail_bounds,
    upper_bound_log_prob,
)

__all__ = [
    "TAIL_REGIMES",
    "TailBound",
    "big_g",
    "compare_g_with_determinant",
    "coordinates",
    "inverse_coordinates",
    "lower_bound_log_prob",
    "optimal_upper_bound",
    "regime_expansion",
    "tail_bounds",
    "upper_bound_log_prob",
]
