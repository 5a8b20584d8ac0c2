# derived.py

"""
Module: derived
Purpose:
    Finite-difference quantities built on log Q: u = d^2/dx^2 log Q + x/(2t),
    d/dx log Q, and the residual of the KdV equation
    u_t + 2 u u_x + u_xxx / 6 = 0.

    Key Features:
    - The quadrature order is settled once at the centre point, then every
      stencil point is evaluated at that fixed order so discretization error
      varies smoothly across the stencil.
    - The exact term x/(2t) is handled analytically; differences act on
      w = d^2/dx^2 log Q only, so the zero model gives exactly x/(2t) and a zero
      residual.
"""
import logging
import math
import warnings
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from det_common.errors import CancellationWarning, InvalidArgumentError
from fredholm_engine.determinant import DetJob, DetOptions, log_q_sigma
from sigma_models.models import ModelKind, SigmaModel

logger = logging.getLogger(__name__)

DEFAULT_STEP = 0.05
CANCELLATION_STEP = 1e-4
# relative noise of a fixed-order log-determinant
DETERMINANT_NOISE = 1e-12

_SECOND = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_FIRST = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_THIRD = np.array([-1.0, 2.0, 0.0, -2.0, 1.0]) / 2.0
_OFFSETS = np.arange(-2, 3)


@dataclass(frozen=True)
class KdvResidual:
    """
    KdV residual at one point.

    :param residual: u_t + 2 u u_x + u_xxx / 6 from the stencil.
    :param u: u at the centre of the stencil.
    :param noise_floor: Residual expected from determinant round-off alone.
    :param noise_dominated: True when |residual| does not exceed the noise floor.
    """

    residual: float
    u: float
    noise_floor: float
    noise_dominated: bool


def _check_step(name: str, h: float) -> None:
    if not (math.isfinite(h) and h > 0):
        raise InvalidArgumentError(f"{name} must be positive and finite, got {h!r}")
    if h < CANCELLATION_STEP:
        warnings.warn(f"{name}={h:g} is below {CANCELLATION_STEP:g}; differences will cancel",
                      CancellationWarning, stacklevel=3)


class _Stencil:
    """log Q at a pinned order, memoized by (x, t)."""

    def __init__(self, model: SigmaModel, x: float, t: float, opts: DetOptions):
        self.model = model
        self.values: Dict[Tuple[float, float], float] = {}
        if model.kind is ModelKind.ZERO:
            self.order = 0
            return
        centre = log_q_sigma(DetJob.auto(model, x, t, opts.order), opts)
        self.order = centre.order_used
        self.values[(x, t)] = centre.log_det
        logger.debug("stencil for %s at (x=%g, t=%g) pinned to order %d", model.name, x, t, self.order)

    def log_q(self, x: float, t: float) -> float:
        if self.model.kind is ModelKind.ZERO:
            return 0.0
        key = (x, t)
        if key not in self.values:
            fixed = DetOptions(order=self.order, refine=False, max_order=self.order)
            self.values[key] = log_q_sigma(DetJob.auto(self.model, x, t, self.order), fixed).log_det
        return self.values[key]

    def many(self, xs: Iterable[float], t: float) -> np.ndarray:
        return np.array([self.log_q(float(x), t) for x in xs])


def u_sigma_fd(model: SigmaModel, x: float, t: float, h: float = DEFAULT_STEP,
               opts: Optional[DetOptions] = None) -> float:
    """
    u(x, t) = d^2/dx^2 log Q + x/(2t) by the fourth-order central second difference.

    :param model: Admissible or zero weight.
    :param x: Real.
    :param t: Positive.
    :param h: Step in x; below 1e-4 a `CancellationWarning` is issued.
    :param opts: Controls for the centre evaluation.
    """
    _check_step("h", h)
    stencil = _Stencil(model, float(x), float(t), opts or DetOptions())
    values = stencil.many(x + h * _OFFSETS, float(t))
    return float(_SECOND @ values) / h ** 2 + x / (2.0 * t)


def dlogq_dx_fd(model: SigmaModel, x: float, t: float, h: float = DEFAULT_STEP,
                opts: Optional[DetOptions] = None) -> float:
    """d/dx log Q by the fourth-order central first difference."""
    _check_step("h", h)
    stencil = _Stencil(model, float(x), float(t), opts or DetOptions())
    values = stencil.many(x + h * _OFFSETS, float(t))
    return float(_FIRST @ values) / h


def kdv_residual(model: SigmaModel, x: float, t: float, hx: float = 0.1, ht: float = DEFAULT_STEP,
                 opts: Optional[DetOptions] = None) -> KdvResidual:
    """
    Residual of u_t + 2 u u_x + u_xxx / 6 at (x, t).

    With w = d^2/dx^2 log Q the residual equals
    w_t + (x/t) w_x + w/t + 2 w w_x + w_xxx / 6. w is sampled on x + k hx,
    k = -2..2, at t and at x for t +- ht.

    :param hx: Step in x.
    :param ht: Step in t; must satisfy ht < t.
    :return: A `KdvResidual`; ``noise_dominated`` flags a residual below the
        round-off floor.
    """
    _check_step("hx", hx)
    _check_step("ht", ht)
    x, t = float(x), float(t)
    if not ht < t:
        raise InvalidArgumentError(f"ht must be smaller than t, got ht={ht!r}, t={t!r}")
    stencil = _Stencil(model, x, t, opts or DetOptions())

    def w_at(xc: float, tc: float) -> float:
        return float(_SECOND @ stencil.many(xc + hx * _OFFSETS, tc)) / hx ** 2

    w_row = np.array([w_at(x + k * hx, t) for k in _OFFSETS])
    w = w_row[2]
    w_x = float(_FIRST @ w_row) / hx
    w_xxx = float(_THIRD @ w_row) / hx ** 3
    w_t = (w_at(x, t + ht) - w_at(x, t - ht)) / (2.0 * ht)
    residual = w_t + (x / t) * w_x + w / t + 2.0 * w * w_x + w_xxx / 6.0

    scale = max(1.0, max(abs(v) for v in stencil.values.values()) if stencil.values else 1.0)
    noise_w = float(np.abs(_SECOND).sum()) * DETERMINANT_NOISE * scale / hx ** 2
    noise_floor = (
        noise_w / ht
        + (abs(x) / t + 2.0 * abs(w)) * float(np.abs(_FIRST).sum()) * noise_w / hx
        + (1.0 / t + 2.0 * abs(w_x)) * noise_w
        + float(np.abs(_THIRD).sum()) * noise_w / (6.0 * hx ** 3)
    )
    u = w + x / (2.0 * t)
    dominated = abs(residual) <= noise_floor
    if dominated:
        logger.info("KdV residual %.3e at (x=%g, t=%g) is below its noise floor %.3e",
                    residual, x, t, noise_floor)
    return KdvResidual(float(residual), float(u), float(noise_floor), bool(dominated))
