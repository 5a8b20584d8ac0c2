# test_airy.py

import math

import numpy as np
import pytest

from airy_oracle import airy_reference, airy_series
from det_common.errors import InvalidArgumentError
from quadrature_airy.airy import (
    AI_PRIME_ZERO,
    AI_ZERO,
    airy,
    airy_kernel,
    airy_kernel_matrix,
    airy_values,
    asymptotic_values,
    maclaurin_values,
)


def test_values_at_zero():
    value = airy(0.0)
    assert abs(value.ai - 3 ** (-2 / 3) / math.gamma(2 / 3)) < 1e-15, "Ai(0) closed form"
    assert abs(value.ai_prime + 3 ** (-1 / 3) / math.gamma(1 / 3)) < 1e-15, "Ai'(0) closed form"
    assert value.ai == AI_ZERO and value.ai_prime == AI_PRIME_ZERO, "series constants should be exact at 0"


def test_value_at_ten():
    value = airy(10.0)
    leading = math.exp(-(2.0 / 3.0) * 10 ** 1.5) / (2.0 * math.sqrt(math.pi) * 10 ** 0.25)
    assert abs(value.ai / leading - 1.0) < 0.01, "Ai(10) should be within 1% of the leading asymptotic"
    expected, _ = airy_series(10.0)
    assert abs(value.ai / expected - 1.0) < 1e-12, "Ai(10) should match the oracle"


def test_value_at_minus_five():
    expected_ai, expected_aip = airy_series(-5.0)
    value = airy(-5.0)
    assert abs(value.ai - expected_ai) < 1e-11, "Ai(-5) should match the oracle"
    assert abs(value.ai_prime - expected_aip) < 1e-11, "Ai'(-5) should match the oracle"


def test_series_oracle_agrees_with_mpmath():
    for x in (-7.5, -1.0, 0.3, 4.0, 9.0):
        assert abs(airy_series(x)[0] - airy_reference(x)[0]) < 1e-15, f"oracle disagrees at {x}"


@pytest.mark.parametrize("x", np.linspace(-20.0, 20.0, 81))
def test_airy_against_oracle(x):
    expected_ai, expected_aip = airy_reference(float(x))
    ai, aip = airy_values(np.array([x]))
    if x > 0:
        assert abs(ai[0] / expected_ai - 1.0) < 1e-11, f"relative Ai error at {x}"
        assert abs(aip[0] / expected_aip - 1.0) < 1e-11, f"relative Ai' error at {x}"
    else:
        scale = max(1.0, abs(x)) ** 0.25
        assert abs(ai[0] - expected_ai) < 1e-12 * scale, f"absolute Ai error at {x}"
        assert abs(aip[0] - expected_aip) < 1e-12 * scale * abs(x) ** 0.5 + 1e-12, f"absolute Ai' error at {x}"


def test_airy_equation_holds():
    h = 1e-5
    for x in np.linspace(-10.0, 10.0, 21):
        _, plus = airy_values(np.array(x + h))
        _, minus = airy_values(np.array(x - h))
        ai, _ = airy_values(np.array(x))
        second = (float(plus) - float(minus)) / (2 * h)
        assert abs(second - x * float(ai)) < 1e-7 * max(1.0, abs(x)), f"Ai'' = x Ai fails at {x}"


def test_series_and_asymptotic_paths_overlap():
    for x in (-8.0, -7.5, -7.0):
        series_ai, series_aip = maclaurin_values(np.array(x))
        asym_ai, asym_aip = asymptotic_values(np.array(x))
        assert abs(float(series_ai) - float(asym_ai)) < 1e-8, f"Ai paths disagree at {x}"
        assert abs(float(series_aip) - float(asym_aip)) < 1e-8, f"Ai' paths disagree at {x}"
    for x in (8.0, 8.5, 9.0, 9.5):
        table_ai, _ = airy_values(np.array(x))
        asym_ai, _ = asymptotic_values(np.array(x))
        assert abs(float(table_ai) / float(asym_ai) - 1.0) < 1e-10, f"table and asymptotic disagree at {x}"


def test_non_finite_argument_is_rejected():
    with pytest.raises(InvalidArgumentError):
        airy(math.nan)
    with pytest.raises(InvalidArgumentError):
        airy_values(np.array([0.0, math.inf]))


def test_kernel_diagonal_at_zero():
    assert abs(airy_kernel(0.0, 0.0) - AI_PRIME_ZERO ** 2) < 1e-15, "K(0, 0) = Ai'(0)^2"


def test_kernel_is_symmetric():
    assert airy_kernel(1.0, 2.0) == airy_kernel(2.0, 1.0), "kernel must be exactly symmetric"
    nodes = np.linspace(-6.0, 6.0, 17)
    matrix = airy_kernel_matrix(nodes)
    assert np.array_equal(matrix, matrix.T), "kernel matrix must be exactly symmetric"


def test_kernel_near_diagonal_uses_confluent_value():
    value = airy(0.5)
    diagonal = value.ai_prime ** 2 - 0.5 * value.ai ** 2
    assert abs(airy_kernel(0.5, 0.5 + 1e-9) / diagonal - 1.0) < 1e-7, "confluent value near the diagonal"


def test_kernel_matrix_is_positive_semidefinite():
    nodes = np.linspace(-10.0, 10.0, 50)
    eigenvalues = np.linalg.eigvalsh(airy_kernel_matrix(nodes))
    assert eigenvalues.min() >= -1e-10, "the Airy kernel is positive semidefinite"
