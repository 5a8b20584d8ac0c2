# expansions.py

"""
Module: expansions
Purpose:
    Large-x expansions of u and log Q built from the shape functions, their
    specialization to the logistic weight, and the exact identities tying the
    two expansions together through u = d^2/dx^2 log Q + x/(2t).

    Key Features:
    - Every evaluation returns an `AsymptoticEval` with its terms kept apart,
      so callers can see which order dominates.
    - Constants (c_+, c'_+, j_sigma) come from `model_constants` unless passed in.
"""
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from asymptotics.shapes import (
    big_f1,
    big_f1_dd,
    big_f2,
    big_f2_dd,
    big_f3,
    big_f3_dd,
    shape_a0,
    shape_a1,
    shape_a2,
)
from det_common.errors import InvalidArgumentError
from sigma_models.models import ModelConstants, SigmaModel, model_constants


@dataclass(frozen=True)
class AsymptoticEval:
    """
    :param y: pi^2 x t / c_+^2.
    :param terms: Named contributions.
    :param total: Their sum.
    """

    y: float
    terms: Dict[str, float]
    total: float

    @classmethod
    def from_terms(cls, y: float, terms: Dict[str, float]) -> "AsymptoticEval":
        return cls(float(y), dict(terms), math.fsum(terms.values()))


def _check_point(x: float, t: float) -> None:
    if not (math.isfinite(x) and math.isfinite(t) and x > 0 and t > 0):
        raise InvalidArgumentError(f"need x > 0 and t > 0, got x={x!r}, t={t!r}")


def scaled_y(x: float, t: float, c_plus: float) -> float:
    return math.pi ** 2 * x * t / c_plus ** 2


def _constants(model: SigmaModel, constants: Optional[ModelConstants]) -> ModelConstants:
    return constants if constants is not None else model_constants(model)


def u_asymptotic(x: float, t: float, model: SigmaModel,
                 constants: Optional[ModelConstants] = None) -> AsymptoticEval:
    """u ~ (x/2t) a_0(y) + a_1(y) / (2 sqrt(xt)) + (t^{1/2} / 2 x^{3/2}) a_2(y)."""
    _check_point(x, t)
    k = _constants(model, constants)
    y = scaled_y(x, t, k.c_plus)
    return AsymptoticEval.from_terms(y, {
        "leading": x / (2.0 * t) * shape_a0(y),
        "subleading": shape_a1(y, k.c_plus_prime) / (2.0 * math.sqrt(x * t)),
        "correction": math.sqrt(t) / (2.0 * x ** 1.5) * shape_a2(y, k.c_plus, k.c_plus_prime, k.j_sigma),
    })


def logq_asymptotic(x: float, t: float, model: SigmaModel,
                    constants: Optional[ModelConstants] = None) -> AsymptoticEval:
    """
    log Q ~ -(c^6 / pi^6 t^4) F_1(y) - (c^3 log c' / pi^4 t^2) F_2(y) + F_3(y) - C log t,
    without the undetermined O(1) constant.
    """
    _check_point(x, t)
    k = _constants(model, constants)
    c = k.c_plus
    y = scaled_y(x, t, c)
    return AsymptoticEval.from_terms(y, {
        "leading": -c ** 6 / (math.pi ** 6 * t ** 4) * big_f1(y),
        "subleading": -c ** 3 * k.log_c_prime / (math.pi ** 4 * t ** 2) * big_f2(y),
        "constant": big_f3(y, k),
        "log": -k.big_c * math.log(t),
    })


def logq_kpz_asymptotic(x: float, t: float) -> AsymptoticEval:
    """
    The logistic-weight form: -F_1(pi^2 xt) / (pi^6 t^4) - sqrt(1 + pi^2 xt) / 6
    - log(1 + pi^2 xt) / 48 - log(sqrt(1 + pi^2 xt) - 1) / 8 + log(t) / 6.
    """
    _check_point(x, t)
    y = math.pi ** 2 * x * t
    s = math.sqrt(1.0 + y)
    return AsymptoticEval.from_terms(y, {
        "leading": -big_f1(y) / (math.pi ** 6 * t ** 4),
        "subleading": -s / 6.0,
        "constant": -math.log1p(y) / 48.0 - math.log(y / (s + 1.0)) / 8.0,
        "log": math.log(t) / 6.0,
    })


def consistency_identities(y: float, x: float, t: float, model: SigmaModel,
                           constants: Optional[ModelConstants] = None) -> Tuple[float, float, float]:
    """
    Residuals of substituting the log Q expansion into u = d^2/dx^2 log Q + x/(2t)
    order by order, with d/dx = (y/x) d/dy:

    1. -(y/x)^2 (c^6 / pi^6 t^4) F_1''(y) + x/(2t) - (x/2t) a_0(y)
    2. -(y/x)^2 (c^3 log c' / pi^4 t^2) F_2''(y) - a_1(y) / (2 sqrt(xt))
    3. (y/x)^2 F_3''(y) - (t^{1/2} / 2 x^{3/2}) a_2(y)
       - y^2 (-3y + 2 sqrt(y + 1) - 3) / (96 x^2 (y + 1)^{5/2} (sqrt(y + 1) - 1)^2)

    Each vanishes identically.

    :param y: Must equal pi^2 x t / c_+^2.
    """
    _check_point(x, t)
    k = _constants(model, constants)
    c = k.c_plus
    expected = scaled_y(x, t, c)
    if not math.isclose(y, expected, rel_tol=1e-12):
        raise InvalidArgumentError(f"y={y!r} does not match pi^2 x t / c_+^2 = {expected!r}")
    ratio = (y / x) ** 2
    res1 = -ratio * c ** 6 / (math.pi ** 6 * t ** 4) * big_f1_dd(y) + x / (2.0 * t) * (1.0 - shape_a0(y))
    res2 = (-ratio * c ** 3 * k.log_c_prime / (math.pi ** 4 * t ** 2) * big_f2_dd(y)
            - shape_a1(y, k.c_plus_prime) / (2.0 * math.sqrt(x * t)))
    s = math.sqrt(1.0 + y)
    sm1 = y / (s + 1.0)
    remainder = y * y * (-3.0 * y + 2.0 * s - 3.0) / (96.0 * x * x * s ** 5 * sm1 ** 2)
    res3 = (ratio * big_f3_dd(y, k)
            - math.sqrt(t) / (2.0 * x ** 1.5) * shape_a2(y, c, k.c_plus_prime, k.j_sigma)
            - remainder)
    return res1, res2, res3
