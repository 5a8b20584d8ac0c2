# airy.py

"""
Module: airy
Purpose:
    Real-axis Airy function Ai and its derivative, and the Airy kernel built on
    them. This is the only special function the determinants need.

    Key Features:
    - |x| <= 2: Maclaurin series of the two standard solutions.
    - 2 < |x| < 10: local Taylor expansion (from the ODE Ai'' = x Ai) around the
      nearest node of a cached table with spacing 0.25. The table is filled by
      marching away from anchors where another path is accurate: downward from
      the asymptotic value at +10 and downward from the series value at -2.
    - |x| >= 10: classical asymptotic expansions truncated at the smallest term.
    - Kernel matrices are symmetric by construction; pairs closer than
      `DIAGONAL_SWITCH` use the confluent value at their midpoint.
"""
import functools
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from det_common.errors import InvalidArgumentError

# Ai(0) = 3^(-2/3)/Gamma(2/3), -Ai'(0) = 3^(-1/3)/Gamma(1/3)
AI_ZERO = 0.35502805388781723926
AI_PRIME_ZERO = -0.25881940379280679840

SERIES_LIMIT = 2.0
ASYMPTOTIC_LIMIT = 10.0
TABLE_STEP = 0.25
DIAGONAL_SWITCH = 1e-6

_SERIES_TERMS = 40
_TAYLOR_TERMS = 30
_ASYMPTOTIC_TERMS = 60
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class AiryValue:
    """Ai and Ai' at one real point."""

    ai: float
    ai_prime: float


def _as_finite_array(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError("Airy arguments must be finite")
    return arr


def maclaurin_values(x) -> Tuple[np.ndarray, np.ndarray]:
    """
    Ai and Ai' from the Maclaurin series Ai = c1 f - c2 g.

    Accurate to full precision for |x| <= 2; usable with growing cancellation
    further out (the overlap checks use it up to |x| = 8).

    :param x: Real scalar or array.
    :return: ``(ai, ai_prime)`` arrays shaped like ``x``.
    """
    x = _as_finite_array(x)
    x3 = x ** 3
    f_term = np.ones_like(x)
    g_term = x.copy()
    fp_term = 0.5 * x * x
    gp_term = np.ones_like(x)
    f, g, fp, gp = f_term.copy(), g_term.copy(), fp_term.copy(), gp_term.copy()
    for k in range(1, _SERIES_TERMS):
        f_term = f_term * x3 / ((3 * k - 1) * (3 * k))
        g_term = g_term * x3 / ((3 * k) * (3 * k + 1))
        gp_term = gp_term * x3 / ((3 * k - 2) * (3 * k))
        f += f_term
        g += g_term
        gp += gp_term
        if k >= 2:
            fp_term = fp_term * x3 / ((3 * k - 3) * (3 * k - 1))
            fp += fp_term
    c1, c2 = AI_ZERO, -AI_PRIME_ZERO
    return c1 * f - c2 * g, c1 * fp - c2 * gp


@functools.lru_cache(maxsize=1)
def _asymptotic_coefficients() -> Tuple[np.ndarray, np.ndarray]:
    u = np.empty(_ASYMPTOTIC_TERMS)
    v = np.empty(_ASYMPTOTIC_TERMS)
    u[0] = v[0] = 1.0
    for k in range(1, _ASYMPTOTIC_TERMS):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        v[k] = -(6 * k + 1) / (6 * k - 1) * u[k]
    return u, v


def _truncated_terms(coeffs: np.ndarray, zeta: np.ndarray) -> np.ndarray:
    # terms coeffs[k] / zeta^k, zeroed from the smallest-magnitude term onward
    powers = np.cumprod(np.broadcast_to(1.0 / zeta[:, None], (zeta.size, coeffs.size - 1)), axis=1)
    terms = np.concatenate([np.ones((zeta.size, 1)), powers], axis=1) * coeffs[None, :]
    cutoff = np.argmin(np.abs(terms), axis=1)
    keep = np.arange(coeffs.size)[None, :] < np.maximum(cutoff, 1)[:, None]
    return np.where(keep, terms, 0.0)


def asymptotic_values(x) -> Tuple[np.ndarray, np.ndarray]:
    """
    Ai and Ai' from the large-|x| expansions, optimally truncated.

    Accurate to about 1e-15 relative for |x| >= 9; used for |x| >= 10.

    :param x: Real scalar or array with |x| large.
    :return: ``(ai, ai_prime)`` arrays shaped like ``x``.
    """
    x = _as_finite_array(x)
    flat = np.atleast_1d(x).ravel()
    ai = np.empty_like(flat)
    aip = np.empty_like(flat)
    u, v = _asymptotic_coefficients()
    k = np.arange(_ASYMPTOTIC_TERMS)
    alternating = np.where(k % 2 == 0, 1.0, -1.0)
    # (-1)^m on both the even (k=2m) and odd (k=2m+1) subsequences
    paired = np.where((k // 2) % 2 == 0, 1.0, -1.0)
    even = (k % 2 == 0)

    pos = flat >= 0
    if np.any(pos):
        z = flat[pos]
        zeta = (2.0 / 3.0) * z ** 1.5
        su = np.sum(_truncated_terms(u, zeta) * alternating, axis=1)
        sv = np.sum(_truncated_terms(v, zeta) * alternating, axis=1)
        decay = np.exp(-zeta) / (2.0 * _SQRT_PI)
        quarter = z ** 0.25
        ai[pos] = decay / quarter * su
        aip[pos] = -decay * quarter * sv
    neg = ~pos
    if np.any(neg):
        z = -flat[neg]
        zeta = (2.0 / 3.0) * z ** 1.5
        tu = _truncated_terms(u, zeta) * paired
        tv = _truncated_terms(v, zeta) * paired
        pu, qu = np.sum(np.where(even, tu, 0.0), axis=1), np.sum(np.where(even, 0.0, tu), axis=1)
        pv, qv = np.sum(np.where(even, tv, 0.0), axis=1), np.sum(np.where(even, 0.0, tv), axis=1)
        phase = zeta - 0.25 * math.pi
        cos_p, sin_p = np.cos(phase), np.sin(phase)
        quarter = z ** 0.25
        ai[neg] = (cos_p * pu + sin_p * qu) / (_SQRT_PI * quarter)
        aip[neg] = quarter / _SQRT_PI * (sin_p * pv - cos_p * qv)
    return ai.reshape(x.shape), aip.reshape(x.shape)


def _taylor_step(x0, a0, a1, h):
    # Ai(x0 + h), Ai'(x0 + h) from the ODE recurrence (k+2)(k+1) c_{k+2} = x0 c_k + c_{k-1}
    coeffs = [np.zeros_like(a0), a0, a1]  # leading zero stands for c_{-1}
    value = a0 + a1 * h
    deriv = a1.copy()
    h_pow = h.copy()  # h^(k-1)
    for k in range(2, _TAYLOR_TERMS):
        c_k = (x0 * coeffs[k - 1] + coeffs[k - 2]) / (k * (k - 1))
        coeffs.append(c_k)
        deriv = deriv + k * c_k * h_pow
        h_pow = h_pow * h
        value = value + c_k * h_pow
    return value, deriv


@functools.lru_cache(maxsize=1)
def _node_table() -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    count = int(round(2 * ASYMPTOTIC_LIMIT / TABLE_STEP)) + 1
    nodes = -ASYMPTOTIC_LIMIT + TABLE_STEP * np.arange(count)
    ai = np.empty(count)
    aip = np.empty(count)

    inner = np.abs(nodes) <= SERIES_LIMIT
    ai[inner], aip[inner] = maclaurin_values(nodes[inner])

    step = np.array([-TABLE_STEP])
    top = count - 1
    ai[top], aip[top] = (float(v) for v in asymptotic_values(nodes[top]))
    j = top - 1
    while nodes[j] > SERIES_LIMIT:
        val, der = _taylor_step(np.array([nodes[j + 1]]), np.array([ai[j + 1]]), np.array([aip[j + 1]]), step)
        ai[j], aip[j] = val[0], der[0]
        j -= 1

    j = int(np.flatnonzero(inner)[0]) - 1
    while j >= 0:
        val, der = _taylor_step(np.array([nodes[j + 1]]), np.array([ai[j + 1]]), np.array([aip[j + 1]]), step)
        ai[j], aip[j] = val[0], der[0]
        j -= 1

    for arr in (nodes, ai, aip):
        arr.setflags(write=False)
    return nodes, ai, aip


def airy_values(x) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized Ai and Ai' on the real axis.

    :param x: Real scalar or array; finite.
    :return: ``(ai, ai_prime)`` arrays shaped like ``x``.
    :raises InvalidArgumentError: On non-finite input.
    """
    x = _as_finite_array(x)
    flat = np.atleast_1d(x).ravel()
    ai = np.empty_like(flat)
    aip = np.empty_like(flat)
    magnitude = np.abs(flat)

    series = magnitude <= SERIES_LIMIT
    if np.any(series):
        ai[series], aip[series] = maclaurin_values(flat[series])

    far = magnitude >= ASYMPTOTIC_LIMIT
    if np.any(far):
        ai[far], aip[far] = asymptotic_values(flat[far])

    middle = ~(series | far)
    if np.any(middle):
        nodes, table_ai, table_aip = _node_table()
        pts = flat[middle]
        idx = np.rint((pts - nodes[0]) / TABLE_STEP).astype(int)
        x0 = nodes[idx]
        ai[middle], aip[middle] = _taylor_step(x0, table_ai[idx], table_aip[idx], pts - x0)
    return ai.reshape(x.shape), aip.reshape(x.shape)


def airy(x: float) -> AiryValue:
    """
    Ai(x) and Ai'(x) for one real argument.

    :param x: Finite real number; documented working range |x| <= 200.
    :return: An `AiryValue`.
    """
    if not math.isfinite(x):
        raise InvalidArgumentError(f"Airy argument must be finite, got {x!r}")
    ai, aip = airy_values(np.array([float(x)]))
    return AiryValue(float(ai[0]), float(aip[0]))


def _confluent(u: np.ndarray) -> np.ndarray:
    ai, aip = airy_values(u)
    return aip * aip - u * ai * ai


def airy_kernel(u: float, v: float) -> float:
    """
    The Airy kernel (Ai(u)Ai'(v) - Ai'(u)Ai(v)) / (u - v).

    :param u: Finite real.
    :param v: Finite real.
    :return: Kernel value; symmetric in its arguments.
    """
    if not (math.isfinite(u) and math.isfinite(v)):
        raise InvalidArgumentError("Airy kernel arguments must be finite")
    if abs(u - v) < DIAGONAL_SWITCH:
        return float(_confluent(np.array([0.5 * (u + v)]))[0])
    ai, aip = airy_values(np.array([u, v], dtype=float))
    return float((ai[0] * aip[1] - aip[0] * ai[1]) / (u - v))


def airy_kernel_matrix(nodes: np.ndarray) -> np.ndarray:
    """
    Airy kernel evaluated on all pairs of ``nodes``.

    :param nodes: 1-D array of distinct finite reals.
    :return: Symmetric ``(n, n)`` array.
    """
    nodes = _as_finite_array(nodes)
    ai, aip = airy_values(nodes)
    return airy_kernel_from_values(nodes, ai, aip)


def airy_kernel_from_values(nodes: np.ndarray, ai: np.ndarray, aip: np.ndarray) -> np.ndarray:
    """
    Same as `airy_kernel_matrix` with Ai, Ai' already evaluated at ``nodes``.
    """
    diff = nodes[:, None] - nodes[None, :]
    numerator = ai[:, None] * aip[None, :] - aip[:, None] * ai[None, :]
    close = np.abs(diff) < DIAGONAL_SWITCH
    with np.errstate(divide="ignore", invalid="ignore"):
        kernel = numerator / np.where(close, 1.0, diff)
    rows, cols = np.nonzero(close)
    kernel[rows, cols] = _confluent(0.5 * (nodes[rows] + nodes[cols]))
    return kernel


"""
Numerical Considerations:

1. **Cancellation**:
   The series combination c1 f - c2 g cancels for positive x, which is why the
   table is anchored at +10 and filled toward the origin, the direction in which
   the recessive solution grows.

2. **Underflow**:
   Beyond x of about 104 the exponential factor underflows and Ai returns 0.

3. **Symmetry**:
   Swapping two nodes negates both numerator and difference exactly in floating
   point, and midpoints are order independent, so kernel matrices are exactly
   symmetric.
"""
