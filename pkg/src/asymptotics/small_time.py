# small_time.py

"""
Module: small_time
Purpose:
    Formulas for t -> 0: the left tail of the Tracy-Widom distribution, the
    deep-tail expansion of log Q for M t^{1/3} <= x <= K, the matching of the
    large-x expansion onto it at x = K, and a classifier of the (x, t) plane.
"""
import math
from typing import Optional

from asymptotics.shapes import big_f1, big_f2, big_f3
from det_common.errors import InvalidArgumentError
from det_common.regime import RegimeConfig
from sigma_models.models import ModelConstants, SigmaModel, model_constants

# zeta'(-1) = 1/12 - log(Glaisher's constant)
ZETA_PRIME_MINUS_ONE = -0.16542114370045092921391966024278
TW_CONSTANT = math.log(2.0) / 24.0 + ZETA_PRIME_MINUS_ONE

REGIMES = ("decay", "tracy_widom", "deep_tail", "small_xt", "large_xt")


def tw_tail(m: float) -> float:
    """log F_TW(-m) ~ -m^3/12 - log(m)/8 + log(2)/24 + zeta'(-1) for m -> +infinity."""
    if not (math.isfinite(m) and m > 0):
        raise InvalidArgumentError(f"m must be positive, got {m!r}")
    return -m ** 3 / 12.0 - math.log(m) / 8.0 + TW_CONSTANT


def deep_tail_partial(x: float, t: float) -> float:
    """
    -x^3/(12t) - log(x t^{-1/3})/8 + log(2)/24 + zeta'(-1).

    The model-dependent integral correction of the full expansion is not included;
    it is O(x^2) small for small x.
    """
    if not (math.isfinite(x) and math.isfinite(t) and x > 0 and t > 0):
        raise InvalidArgumentError(f"need x > 0 and t > 0, got x={x!r}, t={t!r}")
    return -x ** 3 / (12.0 * t) - math.log(x * t ** (-1.0 / 3.0)) / 8.0 + TW_CONSTANT


def gluing_residual(big_k: float, t: float, model: SigmaModel,
                    constants: Optional[ModelConstants] = None) -> float:
    """
    (c^6/pi^6 t^4) F_1(y) + (c^3 log c'/pi^4 t^2) F_2(y) - F_3(y)
    - [K^3/(12t) - (C + 1/24) log t] with y = pi^2 K t / c^2.

    Bounded as t -> 0: the large-x expansion of log Q at x = K joins
    -K^3/(12t) + log(t)/24.
    """
    if not (math.isfinite(big_k) and math.isfinite(t) and big_k > 0 and t > 0):
        raise InvalidArgumentError(f"need K > 0 and t > 0, got K={big_k!r}, t={t!r}")
    k = constants if constants is not None else model_constants(model)
    c = k.c_plus
    y = math.pi ** 2 * big_k * t / c ** 2
    expansion = (c ** 6 / (math.pi ** 6 * t ** 4) * big_f1(y)
                 + c ** 3 * k.log_c_prime / (math.pi ** 4 * t ** 2) * big_f2(y)
                 - big_f3(y, k))
    return expansion - (big_k ** 3 / (12.0 * t) - (k.big_c + 1.0 / 24.0) * math.log(t))


def classify_regime(x: float, t: float, regime: RegimeConfig = RegimeConfig()) -> str:
    """
    Name the asymptotic region containing (x, t):
    ``decay`` for x <= -M t^{1/3}, ``tracy_widom`` for |x| < M t^{1/3},
    ``deep_tail`` for M t^{1/3} <= x < K, then ``small_xt`` or ``large_xt``
    on either side of xt = delta.
    """
    if not (math.isfinite(x) and math.isfinite(t) and t > 0):
        raise InvalidArgumentError(f"need finite x and t > 0, got x={x!r}, t={t!r}")
    window = regime.big_m * t ** (1.0 / 3.0)
    if x <= -window:
        return "decay"
    if x < window:
        return "tracy_widom"
    if x < regime.big_k:
        return "deep_tail"
    return "small_xt" if x * t <= regime.delta else "large_xt"
