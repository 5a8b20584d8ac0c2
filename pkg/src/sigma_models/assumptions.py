# assumptions.py

"""
Module: assumptions
Purpose:
    Sampled checks of the admissibility assumptions on a weight: range of sigma,
    monotone and log-convex F, and the exponential tails at both ends.
    Failures are reported, never raised.
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from sigma_models.models import SigmaModel

GRID = np.arange(-60, 61) * 0.5
DERIVATIVE_FLOOR = -1e-12
CONSISTENCY_TOL = 1e-12
TAIL_POINT = 20.0


@dataclass(frozen=True)
class CheckOutcome:
    """One named check; ``worst_margin`` is negative exactly when it fails."""

    name: str
    passed: bool
    worst_margin: float


@dataclass(frozen=True)
class AssumptionReport:
    model_name: str
    admissible: bool
    checks: Tuple[CheckOutcome, ...]

    @property
    def passed(self) -> bool:
        return self.admissible and all(c.passed for c in self.checks)

    def failures(self) -> Tuple[CheckOutcome, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _outcome(name: str, margin: float) -> CheckOutcome:
    margin = float(margin)
    return CheckOutcome(name, margin >= 0.0, margin)


def check_assumptions(model: SigmaModel) -> AssumptionReport:
    """
    Evaluate the admissibility checks on the grid r = -30, -29.5, ..., 30.

    :param model: Any model; non-admissible kinds yield a single failed check.
    :return: An `AssumptionReport`.
    """
    if not model.admissible:
        return AssumptionReport(model.name, False, (CheckOutcome("admissible", False, -math.inf),))

    sigma = np.asarray(model.sigma(GRID), dtype=float)
    log_f = np.asarray(model.log_f(GRID), dtype=float)
    d1 = np.asarray(model.log_f_d1(GRID), dtype=float)
    d2 = np.asarray(model.log_f_d2(GRID), dtype=float)

    left = float(model.log_f(np.array(-TAIL_POINT)))
    right = float(model.log_f_excess(np.array(TAIL_POINT))) - math.log(model.c_plus_prime)
    slope_right = float(model.log_f_d1(np.array(TAIL_POINT)))
    slope_left = float(model.log_f_d1(np.array(-TAIL_POINT)))

    checks = (
        CheckOutcome("sigma_range", bool(sigma.min() >= 0.0 and sigma.max() < 1.0),
                     float(min(sigma.min(), 1.0 - sigma.max()))),
        _outcome("f_increasing", d1.min() - DERIVATIVE_FLOOR),
        _outcome("log_convex", d2.min() - DERIVATIVE_FLOOR),
        _outcome("left_tail", 10.0 * model.c_minus_prime * math.exp(-model.c_minus * TAIL_POINT) - abs(left)),
        _outcome("right_tail", 10.0 * math.exp(-model.epsilon * TAIL_POINT) - abs(right)),
        _outcome("sigma_consistency",
                 CONSISTENCY_TOL - np.max(np.abs(sigma - (-np.expm1(-log_f))))),
        _outcome("slope_limit_right",
                 10.0 * math.exp(-0.5 * model.epsilon * TAIL_POINT) - abs(slope_right - model.c_plus)),
        _outcome("slope_limit_left",
                 10.0 * math.exp(-0.5 * model.c_minus * TAIL_POINT) - slope_left),
    )
    return AssumptionReport(model.name, True, checks)
