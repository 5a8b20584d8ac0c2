# large_xt.py

"""
Module: large_xt
Purpose:
    Scalar coefficients for large x with xt >= delta. The endpoint a(x, t) is the
    unique root of

        h(a) = int_{-inf}^{a} (log F)'((x/t) zeta) / sqrt(a - zeta) dzeta - pi sqrt(xt) (1 - a),

    which is increasing in a because F is log-convex. From a follow g_1 and the
    conformal-map coefficients f_1, f_2, and the leading behaviour of u and of
    d/dx log Q.

    Key Features:
    - Bracket from the constructive bounds a_- <= a <= a_+, which need
      M = ||v||_1 + 2 ||v||_inf with v = (log F)' - c_+ 1_{r > 0}.
    - Brent's method on the bracket, then Newton polish with
      h'(a) = (x/t) int (log F)''((x/t) zeta) / sqrt(a - zeta) dzeta + pi sqrt(xt).
"""
import functools
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from asymptotics.shapes import shape_a0, shape_a1, shape_a2
from det_common.errors import EndpointBracketError, InvalidArgumentError
from det_common.regime import RegimeConfig
from quadrature_airy.gauss_legendre import composite_rule
from rh_scalars.endpoint_quadrature import PANEL_ORDER, endpoint_rule, r_breakpoints
from sigma_models.models import SigmaModel, j_sigma

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200
NEWTON_STEPS = 3
FALLBACK_LOWER = 1e-6


class EndpointBounds(NamedTuple):
    a_minus: float
    a_plus: float
    big_m: float


@dataclass(frozen=True)
class EndpointSolution:
    """
    :param a: The endpoint a(x, t).
    :param residual: h(a) at the returned value.
    :param bracket: ``(lo, hi)`` used by the root finder.
    :param iterations: Brent iterations plus accepted Newton steps.
    """

    a: float
    residual: float
    bracket: Tuple[float, float]
    iterations: int


def _check_point(x: float, t: float) -> None:
    for name, value in (("x", x), ("t", t)):
        if not (math.isfinite(value) and value > 0):
            raise InvalidArgumentError(f"{name} must be positive and finite, got {value!r}")


def _note_regime(operation: str, x: float, t: float, regime: RegimeConfig) -> None:
    if not regime.large_xt(x, t):
        logger.warning("%s evaluated outside the large-xt regime (x=%g, xt=%g, K=%g, delta=%g)",
                       operation, x, x * t, regime.big_k, regime.delta)


@functools.lru_cache(maxsize=32)
def v_norms(model: SigmaModel) -> Tuple[float, float]:
    """
    (||v||_1, ||v||_inf) for v = (log F)' - c_+ 1_{r > 0}.

    Integrated over the same truncated r-range as the endpoint quadratures; the
    supremum is taken over the nodes and both one-sided limits at 0.
    """
    model.require_admissible("v_norms")
    rule = composite_rule(r_breakpoints(model), PANEL_ORDER)
    v = model.log_f_d1(rule.nodes) - model.c_plus * (rule.nodes > 0)
    at_zero = float(model.log_f_d1(np.array(0.0)))
    sup = max(float(np.max(np.abs(v))), abs(at_zero), abs(at_zero - model.c_plus))
    return rule.integrate(np.abs(v)), sup


def endpoint_bounds(x: float, t: float, model: SigmaModel) -> EndpointBounds:
    """
    a_-(x, t) and a_+(x, t): the roots of 2 c_+ sqrt(a) -+ M sqrt(t/x) = pi sqrt(xt) (1 - a).

    a_- is NaN when x <= M / pi, where the lower bound degenerates.
    """
    _check_point(x, t)
    l1, sup = v_norms(model)
    big_m = l1 + 2.0 * sup
    c = model.c_plus

    def bound(sign: float) -> float:
        inner = c * c + math.pi * t * (math.pi * x + sign * big_m)
        if inner < 0:
            return math.nan
        return (1.0 + 2.0 * c * c / (math.pi ** 2 * t * x) + sign * big_m / (math.pi * x)
                - 2.0 * c * math.sqrt(inner) / (math.pi ** 2 * t * x))

    return EndpointBounds(bound(-1.0), bound(1.0), big_m)


def _integral(a: float, x: float, t: float, model: SigmaModel, derivative, order: int,
              weighted: bool = False) -> float:
    rule = endpoint_rule(a, x / t, model, order)
    values = derivative(rule.r)
    return rule.times_sqrt(values) if weighted else rule.over_sqrt(values)


def endpoint_function(a: float, x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER) -> float:
    """h(a) for the endpoint equation; zero at a(x, t)."""
    return (_integral(a, x, t, model, model.log_f_d1, order)
            - math.pi * math.sqrt(x * t) * (1.0 - a))


def _endpoint_slope(a: float, x: float, t: float, model: SigmaModel, order: int) -> float:
    return (x / t) * _integral(a, x, t, model, model.log_f_d2, order) + math.pi * math.sqrt(x * t)


def _bracket(x: float, t: float, model: SigmaModel, order: int) -> Tuple[float, float, float, float]:
    bounds = endpoint_bounds(x, t, model)
    candidates = []
    if math.isfinite(bounds.a_minus) and 0 < bounds.a_minus < bounds.a_plus:
        candidates.append((bounds.a_minus, bounds.a_plus))
    candidates.append((FALLBACK_LOWER, 2.0 + bounds.big_m / (math.pi * x)))
    for lo, hi in candidates:
        h_lo = endpoint_function(lo, x, t, model, order)
        h_hi = endpoint_function(hi, x, t, model, order)
        if h_lo < 0 < h_hi:
            return lo, hi, h_lo, h_hi
        logger.debug("endpoint bracket [%g, %g] has h = %g, %g; trying the next one", lo, hi, h_lo, h_hi)
    raise EndpointBracketError(lo, hi, h_lo, h_hi)


def solve_endpoint_a(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
                     regime: RegimeConfig = RegimeConfig()) -> EndpointSolution:
    """
    Root a(x, t) of the endpoint equation.

    :param x: Positive; the constructive bracket needs x > M / pi.
    :param t: Positive.
    :param model: Admissible weight.
    :param order: Nodes per quadrature panel.
    :return: An `EndpointSolution` with |residual| <= 1e-11 (1 + pi sqrt(xt)) in
        ordinary use.
    :raises EndpointBracketError: When neither bracket shows a sign change.
    """
    _check_point(x, t)
    model.require_admissible("solve_endpoint_a")
    _note_regime("solve_endpoint_a", x, t, regime)
    lo, hi, _, _ = _bracket(x, t, model, order)
    root, info = brentq(endpoint_function, lo, hi, args=(x, t, model, order),
                        xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=MAX_ITERATIONS,
                        full_output=True)
    a = float(root)
    residual = endpoint_function(a, x, t, model, order)
    iterations = int(info.iterations)
    for _ in range(NEWTON_STEPS):
        candidate = a - residual / _endpoint_slope(a, x, t, model, order)
        if not lo < candidate < hi:
            break
        candidate_residual = endpoint_function(candidate, x, t, model, order)
        if abs(candidate_residual) >= abs(residual):
            break
        a, residual = candidate, candidate_residual
        iterations += 1
    logger.debug("a(x=%g, t=%g) = %.17g, residual %.2e after %d iterations", x, t, a, residual, iterations)
    return EndpointSolution(a, residual, (lo, hi), iterations)


def endpoint_a_expansion(x: float, t: float, model: SigmaModel) -> float:
    """a_0(y) + (t^{1/2} / x^{3/2}) a_1(y) + (t^{3/2} / x^{5/2}) a_2(y), y = pi^2 x t / c_+^2."""
    _check_point(x, t)
    y = math.pi ** 2 * x * t / model.c_plus ** 2
    return (shape_a0(y)
            + math.sqrt(t) / x ** 1.5 * shape_a1(y, model.c_plus_prime)
            + t ** 1.5 / x ** 2.5 * shape_a2(y, model.c_plus, model.c_plus_prime, j_sigma(model)))


def _solution(x, t, model, order, regime, solution):
    return solution if solution is not None else solve_endpoint_a(x, t, model, order, regime)


def g1_large(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
             regime: RegimeConfig = RegimeConfig(), solution: Optional[EndpointSolution] = None) -> float:
    """g_1 = a^2/4 - a/2 + (1 / (pi sqrt(xt))) int (log F)'((x/t) zeta) sqrt(a - zeta) dzeta."""
    a = _solution(x, t, model, order, regime, solution).a
    integral = _integral(a, x, t, model, model.log_f_d1, order, weighted=True)
    return a * a / 4.0 - a / 2.0 + integral / (math.pi * math.sqrt(x * t))


def f_coeffs_large(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
                   regime: RegimeConfig = RegimeConfig(),
                   solution: Optional[EndpointSolution] = None) -> Tuple[float, float]:
    """
    f_1 = (1 + x^{1/2} / (pi t^{3/2}) int (log F)'' / sqrt(a - zeta))^{2/3},
    f_2 = 4 x^{3/2} / (15 pi t^{5/2} f_1^{1/2}) int (log F)''' / sqrt(a - zeta).
    """
    a = _solution(x, t, model, order, regime, solution).a
    second = _integral(a, x, t, model, model.log_f_d2, order)
    third = _integral(a, x, t, model, model.log_f_d3, order)
    f1 = (1.0 + math.sqrt(x) / (math.pi * t ** 1.5) * second) ** (2.0 / 3.0)
    f2 = 4.0 * x ** 1.5 / (15.0 * math.pi * t ** 2.5 * math.sqrt(f1)) * third
    return f1, f2


def u_from_endpoint(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
                    regime: RegimeConfig = RegimeConfig()) -> float:
    """u ~ (x / 2t) a(x, t)."""
    return x / (2.0 * t) * solve_endpoint_a(x, t, model, order, regime).a


def dlogq_dx_large(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
                   regime: RegimeConfig = RegimeConfig()) -> float:
    """d/dx log Q ~ -(x^2 / t)(1/4 + g_1) - 5 f_2 / (32 x f_1^{5/2})."""
    solution = solve_endpoint_a(x, t, model, order, regime)
    g1 = g1_large(x, t, model, order, regime, solution)
    f1, f2 = f_coeffs_large(x, t, model, order, regime, solution)
    return -x * x / t * (0.25 + g1) - 5.0 * f2 / (32.0 * x * f1 ** 2.5)


def x2g_expansion(x: float, t: float, model: SigmaModel) -> float:
    """Seven-term large-x expansion of (x^2 / t)(1/4 + g_1)."""
    _check_point(x, t)
    c, log_c, j = model.c_plus, math.log(model.c_plus_prime), j_sigma(model)
    y = math.pi ** 2 * x * t / c ** 2
    a0, a1, a2 = shape_a0(y), shape_a1(y, model.c_plus_prime), shape_a2(y, c, model.c_plus_prime, j)
    r0 = math.sqrt(a0)
    return ((a0 - 1.0) ** 2 * x * x / (4.0 * t)
            + 2.0 * c / (3.0 * math.pi) * a0 ** 1.5 * (x / t) ** 1.5
            + ((a0 - 1.0) * a1 / 2.0 + log_c / math.pi * r0) * math.sqrt(x / t)
            + c / math.pi * a1 * r0 / t
            + ((a0 - 1.0) * a2 / 2.0 - j / r0) * math.sqrt(t / x)
            + (a1 * a1 / 4.0 + c / math.pi * a2 * r0 + log_c / (2.0 * math.pi * r0) * a1) / x
            + c / (4.0 * math.pi) * a1 * a1 / r0 / (math.sqrt(t) * x ** 1.5))


def f_ratio_limit(y: float) -> float:
    """Large-x limit of -5 f_2 / (32 f_1^{5/2}): (1 + sqrt(1 + y)) / (48 (1 + y))."""
    if not (math.isfinite(y) and y >= 0):
        raise InvalidArgumentError(f"y must be non-negative, got {y!r}")
    return (1.0 + math.sqrt(1.0 + y)) / (48.0 * (1.0 + y))
