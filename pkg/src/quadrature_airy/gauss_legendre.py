# gauss_legendre.py

"""
Module: gauss_legendre
Purpose:
    Gauss-Legendre rules on [-1, 1], their affine images on finite intervals, and
    composite (panelled) rules built from them. Every integral in the toolkit
    goes through these rules.

    Key Features:
    - Nodes from a vectorized Newton iteration on the three-term Legendre
      recurrence, started from asymptotic guesses; O(n^2) and deterministic.
    - Rules are cached per order and their arrays are read-only.
    - `composite_rule` concatenates mapped panels between breakpoints.
"""
import functools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from det_common.errors import InvalidArgumentError

MAX_ORDER = 2048
_NEWTON_TOL = 1e-15
_NEWTON_MAX_ITER = 100


@dataclass(frozen=True)
class QuadratureRule:
    """
    Nodes and positive weights of a quadrature rule on ``[lo, hi]``.

    :param nodes: Ascending abscissae inside ``(lo, hi)``.
    :param weights: Positive weights summing to ``hi - lo``.
    :param lo: Left end of the interval.
    :param hi: Right end of the interval.
    """

    nodes: np.ndarray
    weights: np.ndarray
    lo: float
    hi: float

    @property
    def order(self) -> int:
        return int(self.nodes.size)

    def integrate(self, values: np.ndarray) -> float:
        """
        Apply the rule to integrand values sampled at ``nodes``.

        :param values: Array with the same length as ``nodes``.
        :return: The weighted sum.
        """
        return float(np.dot(self.weights, values))


def _legendre_and_derivative(n: int, x: np.ndarray):
    # P_n(x) and P_n'(x) from the three-term recurrence
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, n + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@functools.lru_cache(maxsize=64)
def gauss_legendre(n: int) -> QuadratureRule:
    """
    Order-``n`` Gauss-Legendre rule on [-1, 1].

    :param n: Number of nodes, ``1 <= n <= 2048``.
    :return: A cached, read-only `QuadratureRule`.
    :raises InvalidArgumentError: If ``n`` is outside the supported range.
    """
    if isinstance(n, bool) or int(n) != n or not 1 <= n <= MAX_ORDER:
        raise InvalidArgumentError(f"Gauss-Legendre order must be in [1, {MAX_ORDER}], got {n!r}")
    n = int(n)
    if n == 1:
        return QuadratureRule(_frozen(np.array([0.0])), _frozen(np.array([2.0])), -1.0, 1.0)

    # only the positive half is computed; the rule is mirrored for exact symmetry
    half = n // 2
    k = np.arange(1, half + 1, dtype=float)
    x = np.cos(math.pi * (k - 0.25) / (n + 0.5)) * (1.0 - (n - 1.0) / (8.0 * n ** 3))
    for _ in range(_NEWTON_MAX_ITER):
        p, dp = _legendre_and_derivative(n, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < _NEWTON_TOL:
            break
    _, dp = _legendre_and_derivative(n, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)

    positive_nodes = x[::-1]
    positive_weights = w[::-1]
    if n % 2:
        _, dp0 = _legendre_and_derivative(n, np.array([0.0]))
        middle_weight = 2.0 / (dp0 * dp0)
        nodes = np.concatenate([-x, [0.0], positive_nodes])
        weights = np.concatenate([w, middle_weight, positive_weights])
    else:
        nodes = np.concatenate([-x, positive_nodes])
        weights = np.concatenate([w, positive_weights])
    return QuadratureRule(_frozen(nodes), _frozen(weights), -1.0, 1.0)


def map_rule(rule: QuadratureRule, lo: float, hi: float) -> QuadratureRule:
    """
    Affinely map a rule onto ``[lo, hi]``.

    :param rule: Source rule (any interval).
    :param lo: New left end, finite.
    :param hi: New right end, finite and larger than ``lo``.
    :return: The mapped rule.
    :raises InvalidArgumentError: On non-finite or reversed endpoints.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidArgumentError(f"interval endpoints must be finite, got [{lo!r}, {hi!r}]")
    if not lo < hi:
        raise InvalidArgumentError(f"interval must satisfy lo < hi, got [{lo!r}, {hi!r}]")
    scale = (hi - lo) / (rule.hi - rule.lo)
    nodes = lo + (rule.nodes - rule.lo) * scale
    weights = rule.weights * scale
    return QuadratureRule(_frozen(nodes), _frozen(weights), float(lo), float(hi))


def composite_rule(breakpoints: Sequence[float], order: int) -> QuadratureRule:
    """
    Concatenate order-``order`` panels between consecutive breakpoints.

    Breakpoints must be strictly increasing; each panel gets its own mapped rule,
    so nodes never coincide with a breakpoint.

    :param breakpoints: At least two strictly increasing finite values.
    :param order: Nodes per panel.
    :return: A rule on ``[breakpoints[0], breakpoints[-1]]``.
    """
    points = [float(b) for b in breakpoints]
    if len(points) < 2:
        raise InvalidArgumentError("a composite rule needs at least two breakpoints")
    base = gauss_legendre(order)
    panels = [map_rule(base, a, b) for a, b in zip(points[:-1], points[1:])]
    nodes = np.concatenate([p.nodes for p in panels])
    weights = np.concatenate([p.weights for p in panels])
    return QuadratureRule(_frozen(nodes), _frozen(weights), points[0], points[-1])
