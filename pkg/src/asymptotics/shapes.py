# shapes.py

"""
Module: shapes
Purpose:
    Closed-form shape functions of the large-x expansions: the endpoint
    coefficients a_0, a_1, a_2 and the functions F_1, F_2, F_3 of y = pi^2 x t / c_+^2,
    together with the second derivatives used to cross-check the expansion of
    u against that of log Q.

    Key Features:
    - s = sqrt(1 + y) throughout; differences such as s - 1 are written as
      y / (s + 1) so nothing cancels as y -> 0.
    - F_1 and F_2 switch to their Maclaurin series below y = 0.1.
"""
import math

from det_common.errors import InvalidArgumentError
from sigma_models.models import ModelConstants

SERIES_SWITCH = 0.1
_SERIES_TERMS = 30


def _check_y(y: float, strict: bool = False) -> float:
    y = float(y)
    if not math.isfinite(y) or y < 0 or (strict and y == 0):
        bound = "positive" if strict else "non-negative"
        raise InvalidArgumentError(f"y must be {bound} and finite, got {y!r}")
    return y


def _root(y: float) -> float:
    return math.sqrt(1.0 + y)


def _root_minus_one(y: float) -> float:
    return y / (_root(y) + 1.0)


def shape_a0(y: float) -> float:
    """a_0(y) = (sqrt(y + 1) - 1)^2 / y = y / (sqrt(y + 1) + 1)^2; a_0(0) = 0."""
    y = _check_y(y)
    return y / (_root(y) + 1.0) ** 2


def shape_a1(y: float, c_plus_prime: float) -> float:
    """a_1(y) = -(log c'_+ / pi) sqrt(y / (1 + y)); identically 0 when c'_+ = 1."""
    y = _check_y(y)
    return -math.log(c_plus_prime) / math.pi * math.sqrt(y / (1.0 + y))


def shape_a2(y: float, c_plus: float, c_plus_prime: float, j_sigma: float) -> float:
    """
    a_2(y) = y^{3/2} / (s (s - 1)^2) * ((1 - 2s) log^2 c'_+ / (4 pi c_+ (1 + y)) - j_sigma),
    s = sqrt(1 + y). Grows like y^{-1/2} as y -> 0.
    """
    y = _check_y(y, strict=True)
    s = _root(y)
    log_c = math.log(c_plus_prime)
    bracket = (1.0 - 2.0 * s) * log_c ** 2 / (4.0 * math.pi * c_plus * s * s) - j_sigma
    return (s + 1.0) ** 2 / (s * math.sqrt(y)) * bracket


def _binomial_series(power: float, first: int, y: float) -> float:
    # sum_{k >= first} binom(power, k) y^k
    coeff = 1.0
    for k in range(first):
        coeff *= (power - k) / (k + 1)
    total = 0.0
    term = coeff * y ** first
    for k in range(first, first + _SERIES_TERMS):
        total += term
        term *= (power - k) / (k + 1) * y
    return total


def big_f1(y: float) -> float:
    """F_1(y) = (4/15)(1 + y)^{5/2} - 4/15 - (2/3) y - y^2 / 2."""
    y = _check_y(y)
    if y < SERIES_SWITCH:
        return 4.0 / 15.0 * _binomial_series(2.5, 3, y)
    return 4.0 / 15.0 * (1.0 + y) ** 2.5 - 4.0 / 15.0 - 2.0 / 3.0 * y - 0.5 * y * y


def big_f2(y: float) -> float:
    """F_2(y) = (2/3)(1 + y)^{3/2} - 2/3 - y = F_1'(y)."""
    y = _check_y(y)
    if y < SERIES_SWITCH:
        return 2.0 / 3.0 * _binomial_series(1.5, 2, y)
    return 2.0 / 3.0 * (1.0 + y) ** 1.5 - 2.0 / 3.0 - y


def _f3_coefficients(constants: ModelConstants):
    a = 2.0 * constants.c_plus * constants.j_sigma / math.pi
    b = a + constants.log_c_prime ** 2 / (2.0 * math.pi ** 2) + 1.0 / 24.0
    return a, b


def big_f3(y: float, constants: ModelConstants) -> float:
    """
    F_3(y) = A sqrt(1 + y) - log(1 + y) / 48 + B log(sqrt(1 + y) - 1),
    A = 2 c_+ j / pi, B = A + log^2 c'_+ / (2 pi^2) + 1/24.
    """
    y = _check_y(y, strict=True)
    a, b = _f3_coefficients(constants)
    return a * _root(y) - math.log1p(y) / 48.0 + b * math.log(_root_minus_one(y))


def big_f1_dd(y: float) -> float:
    """F_1''(y) = sqrt(1 + y) - 1."""
    return _root_minus_one(_check_y(y))


def big_f2_dd(y: float) -> float:
    """F_2''(y) = 1 / (2 sqrt(1 + y))."""
    return 0.5 / _root(_check_y(y))


def big_f3_dd(y: float, constants: ModelConstants) -> float:
    """Second derivative of `big_f3` in closed form."""
    y = _check_y(y, strict=True)
    a, b = _f3_coefficients(constants)
    s = _root(y)
    sm1 = _root_minus_one(y)
    return (-a / (4.0 * s ** 3) + 1.0 / (48.0 * s ** 4)
            - b * (2.0 * s - 1.0) / (4.0 * s ** 3 * sm1 ** 2))
