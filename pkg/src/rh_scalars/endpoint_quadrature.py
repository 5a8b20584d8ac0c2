# endpoint_quadrature.py

"""
Module: endpoint_quadrature
Purpose:
    Integrals over (-infinity, E] with a square-root endpoint at E,
    int f(zeta) / sqrt(E - zeta) dzeta and int f(zeta) sqrt(E - zeta) dzeta,
    where f depends on zeta through r = scale * zeta and changes only on the
    r-scale of the weight sigma.

    Key Features:
    - The substitution zeta = E - tau^2 removes the endpoint singularity:
      dzeta / sqrt(E - zeta) = 2 dtau.
    - Panels of width at most 5 / c_+ in r, with a breakpoint at r = 0 where W has a
      kink, mapped to tau; one more panel covers the smooth stretch up to E.
    - The left end is cut at r = -40 / c_-, where the integrands are below e^{-40}.
"""
import math
from dataclasses import dataclass

import numpy as np

from det_common.errors import InvalidArgumentError
from quadrature_airy.gauss_legendre import composite_rule
from sigma_models.models import SigmaModel

PANEL_ORDER = 32
TAIL_EXPONENT = 40.0
PANEL_WIDTH = 5.0


@dataclass(frozen=True)
class EndpointRule:
    """
    Nodes in tau for integrals ending at ``endpoint``.

    :param endpoint: E.
    :param scale: r = scale * zeta.
    :param tau: Gauss nodes in tau, ascending.
    :param weights: Matching weights.
    :param tau_max: tau of the truncated left end.
    """

    endpoint: float
    scale: float
    tau: np.ndarray
    weights: np.ndarray
    tau_max: float

    @property
    def zeta(self) -> np.ndarray:
        return self.endpoint - self.tau ** 2

    @property
    def r(self) -> np.ndarray:
        return self.scale * self.zeta

    def over_sqrt(self, values: np.ndarray) -> float:
        """int f / sqrt(E - zeta) dzeta, given f at the nodes."""
        return 2.0 * float(np.dot(self.weights, values))

    def times_sqrt(self, values: np.ndarray) -> float:
        """int f * sqrt(E - zeta) dzeta, given f at the nodes."""
        return 2.0 * float(np.dot(self.weights, values * self.tau ** 2))


def r_breakpoints(model: SigmaModel) -> np.ndarray:
    """Panel ends in r on [-40 / c_-, 40 / epsilon], including 0."""
    lo = -TAIL_EXPONENT / model.c_minus
    hi = TAIL_EXPONENT / model.epsilon
    width = PANEL_WIDTH / model.c_plus
    left = np.linspace(lo, 0.0, max(1, math.ceil(-lo / width)) + 1)
    right = np.linspace(0.0, hi, max(1, math.ceil(hi / width)) + 1)
    return np.concatenate([left, right[1:]])


def endpoint_rule(endpoint: float, scale: float, model: SigmaModel, order: int = PANEL_ORDER) -> EndpointRule:
    """
    Build the tau-rule for integrals over (-infinity, endpoint].

    :param endpoint: Finite E.
    :param scale: Positive factor mapping zeta to the argument r of the model.
    :param model: Admissible weight supplying c_-, c_+ and epsilon.
    :param order: Nodes per panel.
    """
    model.require_admissible("endpoint quadrature")
    if not (math.isfinite(endpoint) and math.isfinite(scale) and scale > 0):
        raise InvalidArgumentError(f"need finite endpoint and scale > 0, got {endpoint!r}, {scale!r}")
    r_end = scale * endpoint
    kept = [r for r in r_breakpoints(model) if r < r_end]
    if not kept:
        raise InvalidArgumentError(f"endpoint {endpoint!r} lies left of the integration range")
    taus = sorted({math.sqrt(endpoint - r / scale) for r in kept} | {0.0})
    # drop breakpoints that coincide in tau
    points = [taus[0]]
    for tau in taus[1:]:
        if tau - points[-1] > 1e-12 * max(1.0, tau):
            points.append(tau)
    rule = composite_rule(points, order)
    return EndpointRule(float(endpoint), float(scale), rule.nodes, rule.weights, points[-1])
