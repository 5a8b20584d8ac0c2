# small_xt.py

"""
Module: small_xt
Purpose:
    Scalar coefficients of the steepest-descent analysis for large x with
    xt <= delta: the endpoint alpha(xt), g_1, the functions W and V, the
    integrals d_1 and chi, and the Taylor coefficients f_1, f_2 of the local
    conformal map. From them, the leading behaviour of u and of d/dx log Q.

    Key Features:
    - alpha is evaluated in the rationalized form pi^2 / (sqrt(c^2 + pi^2 xt) + c)^2,
      which has no cancellation as xt -> 0.
    - W(zeta; x) = -log F(x^2 zeta) + x^2 V(zeta) uses log F(r) - c_+ r on r > 0,
      so it stays finite when x^2 zeta is large.
    - d_1 and chi use `endpoint_rule`; chi's 3/2-power endpoint becomes the
      regular difference quotient (W(alpha) - W(alpha - tau^2)) / tau^2.
"""
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from det_common.errors import InvalidArgumentError
from det_common.regime import RegimeConfig
from quadrature_airy.gauss_legendre import gauss_legendre, map_rule
from rh_scalars.endpoint_quadrature import PANEL_ORDER, endpoint_rule
from sigma_models.models import SigmaModel

logger = logging.getLogger(__name__)

CONFORMAL_ORDER = 32


def _check_positive(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0):
            raise InvalidArgumentError(f"{name} must be positive and finite, got {value!r}")


def _note_regime(operation: str, x: float, t: float, regime: RegimeConfig) -> bool:
    inside = regime.small_xt(x, t)
    if not inside:
        logger.warning("%s evaluated outside the small-xt regime (x=%g, xt=%g, K=%g, delta=%g)",
                       operation, x, x * t, regime.big_k, regime.delta)
    return inside


def alpha_endpoint(xt: float, c_plus: float) -> float:
    """
    Endpoint alpha(xt): the bounded root of c_+ sqrt(alpha) / pi = (1 - alpha xt) / 2.

    :param xt: Product x t, positive.
    :param c_plus: Growth rate c_+ of the model.
    :return: alpha in (0, pi^2 / (4 c_+^2)].
    """
    _check_positive(xt=xt, c_plus=c_plus)
    return math.pi ** 2 / (math.sqrt(c_plus ** 2 + math.pi ** 2 * xt) + c_plus) ** 2


def g1_small(xt: float, c_plus: float) -> float:
    """g_1(xt) = alpha (sqrt(alpha) c_+ / (6 pi) - 1/4)."""
    alpha = alpha_endpoint(xt, c_plus)
    return alpha * (math.sqrt(alpha) * c_plus / (6.0 * math.pi) - 0.25)


def v_function(zeta, c_plus: float) -> np.ndarray:
    """V(zeta) = c_+ zeta on zeta > 0 and 0 elsewhere."""
    zeta = np.asarray(zeta, dtype=float)
    return np.where(zeta > 0, c_plus * zeta, 0.0)


def w_function(zeta, x: float, model: SigmaModel) -> np.ndarray:
    """
    W(zeta; x) = -log F(x^2 zeta) + x^2 V(zeta).

    :param zeta: Real scalar or array.
    :param x: Positive.
    :param model: Admissible weight.
    """
    _check_positive(x=x)
    model.require_admissible("w_function")
    r = x * x * np.asarray(zeta, dtype=float)
    positive = r > 0
    # each branch only sees arguments of its own sign
    left = model.log_f(np.where(positive, 0.0, r))
    right = model.log_f_excess(np.where(positive, r, 0.0))
    return -np.where(positive, right, left)


def d1(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
       regime: RegimeConfig = RegimeConfig()) -> float:
    """
    d_1 = (1/2pi) int_{-inf}^{alpha} W(s; x) / sqrt(alpha - s) ds.

    :param order: Nodes per quadrature panel.
    """
    _check_positive(x=x, t=t)
    _note_regime("d1", x, t, regime)
    alpha = alpha_endpoint(x * t, model.c_plus)
    rule = endpoint_rule(alpha, x * x, model, order)
    return rule.over_sqrt(w_function(rule.zeta, x, model)) / (2.0 * math.pi)


def chi(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
        regime: RegimeConfig = RegimeConfig()) -> float:
    """
    chi = (1/2pi) int_{-inf}^{alpha} (W(alpha; x) - W(s; x)) / (alpha - s)^{3/2} ds.

    With s = alpha - tau^2 the integrand is 2 (W(alpha) - W(alpha - tau^2)) / tau^2;
    beyond the truncation point W vanishes and the remaining 2 W(alpha) / tau
    integrates in closed form.
    """
    _check_positive(x=x, t=t)
    _note_regime("chi", x, t, regime)
    alpha = alpha_endpoint(x * t, model.c_plus)
    rule = endpoint_rule(alpha, x * x, model, order)
    w_alpha = float(w_function(alpha, x, model))
    quotient = (w_alpha - w_function(rule.zeta, x, model)) / rule.tau ** 2
    total = rule.over_sqrt(quotient) + 2.0 * w_alpha / rule.tau_max
    return total / (2.0 * math.pi)


def f_coeffs_small(xt: float, c_plus: float) -> Tuple[float, float]:
    """
    First two Taylor coefficients of the conformal map f at alpha.

    :return: ``(f1, f2)`` with f1 > 0 and f2 < 0.
    """
    alpha = alpha_endpoint(xt, c_plus)
    base = c_plus / (math.pi * math.sqrt(alpha)) + xt
    f1 = base ** (2.0 / 3.0)
    f2 = -2.0 * c_plus / (15.0 * math.pi * alpha ** 1.5) * base ** (-1.0 / 3.0)
    return f1, f2


def conformal_map_small(zeta: float, xt: float, c_plus: float, order: int = CONFORMAL_ORDER) -> float:
    """
    f(zeta) = (-3/4 phi(zeta))^{2/3} for real zeta > alpha, with
    phi(zeta) = int_alpha^zeta (2 g'(s) - c_+) ds computed by quadrature.

    On s > alpha, g'(s) = -xt sqrt(s - alpha) + (c_+/pi) arctan(sqrt(alpha / (s - alpha))).
    """
    alpha = alpha_endpoint(xt, c_plus)
    if not (math.isfinite(zeta) and zeta > alpha):
        raise InvalidArgumentError(f"zeta must exceed alpha={alpha!r}, got {zeta!r}")
    rule = map_rule(gauss_legendre(order), 0.0, math.sqrt(zeta - alpha))
    tau = rule.nodes
    # 2 g'(alpha + tau^2) - c_+, with arctan(sqrt(alpha)/tau) = pi/2 - arctan(tau/sqrt(alpha))
    slope = -2.0 * xt * tau - 2.0 * c_plus / math.pi * np.arctan(tau / math.sqrt(alpha))
    phi = rule.integrate(slope * 2.0 * tau)
    return (-0.75 * phi) ** (2.0 / 3.0)


def u_small_xt(x: float, t: float, model: SigmaModel) -> float:
    """u ~ x^2 alpha / 2 - log c'_+ / (2 pi x t sqrt(alpha) + 2 c_+)."""
    _check_positive(x=x, t=t)
    alpha = alpha_endpoint(x * t, model.c_plus)
    return x * x * alpha / 2.0 - math.log(model.c_plus_prime) / (
        2.0 * math.pi * x * t * math.sqrt(alpha) + 2.0 * model.c_plus)


@dataclass(frozen=True)
class RHScalars:
    """
    The small-xt coefficients at one point.

    :param alpha: Endpoint alpha(xt).
    :param g1_small: g_1(xt).
    :param d1: d_1(x, t).
    :param chi: chi(x, t).
    :param f1_small: f_1(xt), positive.
    :param f2_small: f_2(xt), negative.
    :param ell: c_+ alpha.
    :param w_alpha: W(alpha; x).
    :param v_alpha: V(alpha).
    :param evaluated_at: ``(x, t)``.
    :param in_regime: Whether x >= K and xt <= delta.
    """

    alpha: float
    g1_small: float
    d1: float
    chi: float
    f1_small: float
    f2_small: float
    ell: float
    w_alpha: float
    v_alpha: float
    evaluated_at: Tuple[float, float]
    in_regime: bool


def evaluate_small_xt(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
                      regime: RegimeConfig = RegimeConfig()) -> RHScalars:
    """All small-xt coefficients at (x, t)."""
    _check_positive(x=x, t=t)
    inside = _note_regime("evaluate_small_xt", x, t, regime)
    xt = x * t
    alpha = alpha_endpoint(xt, model.c_plus)
    f1, f2 = f_coeffs_small(xt, model.c_plus)
    quiet = RegimeConfig(delta=max(regime.delta, xt), big_k=min(regime.big_k, x), big_m=regime.big_m)
    return RHScalars(
        alpha=alpha,
        g1_small=g1_small(xt, model.c_plus),
        d1=d1(x, t, model, order, quiet),
        chi=chi(x, t, model, order, quiet),
        f1_small=f1,
        f2_small=f2,
        ell=model.c_plus * alpha,
        w_alpha=float(w_function(alpha, x, model)),
        v_alpha=float(v_function(alpha, model.c_plus)),
        evaluated_at=(float(x), float(t)),
        in_regime=inside,
    )


def dlogq_dx_small(x: float, t: float, model: SigmaModel, order: int = PANEL_ORDER,
                   regime: RegimeConfig = RegimeConfig()) -> float:
    """
    d/dx log Q ~ -x^2/(4t) - x^3 g_1 + x d_1 + chi^2 / (4 x f_1^{3/2}) - 5 f_2 / (32 x f_1^{5/2}).
    """
    s = evaluate_small_xt(x, t, model, order, regime)
    return (-x * x / (4.0 * t) - x ** 3 * s.g1_small + x * s.d1
            + s.chi ** 2 / (4.0 * x * s.f1_small ** 1.5)
            - 5.0 * s.f2_small / (32.0 * x * s.f1_small ** 2.5))
