# tails.py

"""
Module: tails
Purpose:
    Lower-tail bounds for the narrow-wedge KPZ height Upsilon_T. Under
    (x, t) = (s T^{-1/6}, T^{-1/2}) the logistic-weight determinant is the
    Laplace-type transform of Upsilon_T, and log Q = -G(s, T) + O(1) gives

        log P(Upsilon_T < -s) <= p - G(s + T^{-1/3} log p, T) + D_+,    p >= 1,
        log P(Upsilon_T < -s) >= -G(s + T^{-1/3} log(s^{3+eps} + T^eps), T) + D_-.

    Key Features:
    - D_+ and D_- exist but are not known; they default to 0, so the bounds are
      exact up to those additive constants only.
    - No sampling: every value here is a deterministic formula, except
      `compare_g_with_determinant`, which calls the Fredholm engine.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from asymptotics.shapes import big_f1
from det_common.errors import InvalidArgumentError
from fredholm_engine.determinant import DetOptions, log_q_at
from sigma_models.models import make_kpz_model

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 0.1
TAIL_REGIMES = ("large_deviation", "deep_tail", "crossover_small")


@dataclass(frozen=True)
class TailBound:
    """
    Both bounds at one (s, T).

    :param s: Depth of the tail event.
    :param T: Time.
    :param lower_log_prob: Lower bound on log P(Upsilon_T < -s).
    :param upper_log_prob: Upper bound on log P(Upsilon_T < -s).
    :param p_used: Exponent p >= 1 of the upper bound.
    :param q_used: s^{3+eps} + T^eps, whose log shifts the lower bound.
    :param d_plus: Additive constant of the upper bound.
    :param d_minus: Additive constant of the lower bound.
    """

    s: float
    T: float
    lower_log_prob: float
    upper_log_prob: float
    p_used: float
    q_used: float
    d_plus: float = 0.0
    d_minus: float = 0.0


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0):
            raise InvalidArgumentError(f"{name} must be positive and finite, got {value!r}")


def coordinates(s: float, T: float) -> Tuple[float, float]:
    """(x, t) = (s T^{-1/6}, T^{-1/2})."""
    _check_positive(s=s, T=T)
    return s * T ** (-1.0 / 6.0), T ** -0.5


def inverse_coordinates(x: float, t: float) -> Tuple[float, float]:
    """(s, T) = (x t^{-1/3}, t^{-2})."""
    _check_positive(x=x, t=t)
    return x * t ** (-1.0 / 3.0), t ** -2.0


def big_g(s: float, T: float) -> float:
    """
    G(s, T) = T^2 F_1(y) / pi^6 + sqrt(1 + y) / 6 + log(1 + y) / 48
    + log(sqrt(1 + y) - 1) / 8 + log(T) / 12, with y = pi^2 s / T^{2/3}.
    """
    _check_positive(s=s, T=T)
    y = math.pi ** 2 * s / T ** (2.0 / 3.0)
    root = math.sqrt(1.0 + y)
    return (T * T * big_f1(y) / math.pi ** 6 + root / 6.0 + math.log1p(y) / 48.0
            + math.log(y / (root + 1.0)) / 8.0 + math.log(T) / 12.0)


def upper_bound_log_prob(s: float, T: float, p: float = 1.0, d_plus: float = 0.0) -> float:
    """p - G(s + T^{-1/3} log p, T) + D_+."""
    if not (math.isfinite(p) and p >= 1):
        raise InvalidArgumentError(f"p must be at least 1, got {p!r}")
    _check_positive(s=s, T=T)
    return p - big_g(s + T ** (-1.0 / 3.0) * math.log(p), T) + d_plus


def _lower_shift(s: float, T: float, epsilon: float) -> float:
    return s ** (3.0 + epsilon) + T ** epsilon


def lower_bound_log_prob(s: float, T: float, epsilon: float = DEFAULT_EPSILON, d_minus: float = 0.0) -> float:
    """-G(s + T^{-1/3} log(s^{3+eps} + T^eps), T) + D_-."""
    _check_positive(s=s, T=T, epsilon=epsilon)
    return -big_g(s + T ** (-1.0 / 3.0) * math.log(_lower_shift(s, T, epsilon)), T) + d_minus


def tail_bounds(s: float, T: float, p: float = 1.0, epsilon: float = DEFAULT_EPSILON,
                d_plus: float = 0.0, d_minus: float = 0.0) -> TailBound:
    """Upper and lower bounds at one point."""
    upper = upper_bound_log_prob(s, T, p, d_plus)
    lower = lower_bound_log_prob(s, T, epsilon, d_minus)
    if d_plus == 0.0 and d_minus == 0.0 and lower > upper:
        logger.warning("lower bound %.6g exceeds upper bound %.6g at s=%g, T=%g", lower, upper, s, T)
    return TailBound(float(s), float(T), lower, upper, float(p), _lower_shift(s, T, epsilon),
                     float(d_plus), float(d_minus))


def optimal_upper_bound(s: float, T: float, d_plus: float = 0.0, points: int = 400) -> Tuple[float, float]:
    """
    Minimize the upper bound over p on a logarithmic grid in [1, max(1, s^3)].

    :return: ``(p, bound)`` at the grid minimum.
    """
    _check_positive(s=s, T=T)
    top = max(0.0, 3.0 * math.log10(s))
    grid = np.logspace(0.0, top, points) if top > 0 else np.array([1.0])
    bounds = np.array([upper_bound_log_prob(s, T, float(p), d_plus) for p in grid])
    best = int(np.argmin(bounds))
    return float(grid[best]), float(bounds[best])


def regime_expansion(s: float, T: float, regime: str) -> float:
    """
    Leading behaviour of log P(Upsilon_T < -s) in one regime of the (s, T) plane.

    :param regime: ``large_deviation`` (s = y T^{2/3}, y fixed), ``deep_tail``
        (s T^{-2/3} -> infinity) or ``crossover_small`` (s T^{-2/3} -> 0).
    """
    _check_positive(s=s, T=T)
    if regime == "large_deviation":
        y = s * T ** (-2.0 / 3.0)
        return -T * T * big_f1(math.pi ** 2 * y) / math.pi ** 6
    if regime == "deep_tail":
        # upper bound at p = s^{3/2}; the sqrt(s) sign follows from expanding T^2 F_1(y) / pi^6
        pi = math.pi
        return (-4.0 * s ** 2.5 * T ** (1.0 / 3.0) / (15.0 * pi)
                + s * s * T ** (2.0 / 3.0) / (2.0 * pi ** 2)
                - 2.0 * s ** 1.5 * T / (3.0 * pi ** 3)
                + 2.0 * s * T ** (4.0 / 3.0) / (3.0 * pi ** 4)
                - math.sqrt(s) * T ** (5.0 / 3.0) / (2.0 * pi ** 5)
                + 4.0 * T * T / (15.0 * pi ** 6)
                - s ** 1.5 * math.log(s) / pi)
    if regime == "crossover_small":
        return -s ** 3 / 12.0 - math.log(s) / 8.0
    raise InvalidArgumentError(f"unknown regime {regime!r}; expected one of {', '.join(TAIL_REGIMES)}")


_KPZ = make_kpz_model()


def compare_g_with_determinant(s: float, T: float, opts: Optional[DetOptions] = None) -> float:
    """log Q_KPZ(s T^{-1/6}, T^{-1/2}) + G(s, T), which stays O(1)."""
    x, t = coordinates(s, T)
    gap = log_q_at(_KPZ, x, t, opts).log_det + big_g(s, T)
    logger.debug("G gap at s=%g, T=%g: %.6g", s, T, gap)
    return gap
