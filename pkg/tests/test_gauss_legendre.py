# test_gauss_legendre.py

import math

import numpy as np
import pytest

from det_common.errors import InvalidArgumentError
from quadrature_airy.gauss_legendre import composite_rule, gauss_legendre, map_rule


def test_one_point_rule_is_midpoint():
    rule = gauss_legendre(1)
    assert list(rule.nodes) == [0.0], "order-1 node should be the midpoint"
    assert list(rule.weights) == [2.0], "order-1 weight should be the interval length"


def test_two_point_rule_closed_form():
    rule = gauss_legendre(2)
    root = 1.0 / math.sqrt(3.0)
    assert np.allclose(rule.nodes, [-root, root], rtol=0, atol=1e-15), "nodes should be +-1/sqrt(3)"
    assert np.allclose(rule.weights, [1.0, 1.0], rtol=0, atol=1e-15), "weights should both be 1"


def test_sixteen_point_rule_integrates_tenth_power():
    rule = gauss_legendre(16)
    assert abs(rule.integrate(rule.nodes ** 10) - 2.0 / 11.0) < 1e-14, "x^10 should integrate to 2/11"


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 16, 32, 47, 64])
def test_rule_structure_and_exactness(n):
    rule = gauss_legendre(n)
    assert np.all(rule.weights > 0), "weights must be positive"
    assert abs(rule.weights.sum() - 2.0) < 2e-13, "weights must sum to the interval length"
    assert np.all(np.diff(rule.nodes) > 0), "nodes must be strictly increasing"
    assert rule.nodes[0] > -1.0 and rule.nodes[-1] < 1.0, "nodes must lie inside the interval"
    for k in range(2 * n):
        exact = 2.0 / (k + 1) if k % 2 == 0 else 0.0
        error = abs(rule.integrate(rule.nodes ** k) - exact)
        assert error < 1e-12 * max(1.0, exact), f"degree {k} not integrated exactly by order {n}"


def test_rule_is_bitwise_reproducible():
    first = gauss_legendre(37)
    gauss_legendre.cache_clear()
    second = gauss_legendre(37)
    assert np.array_equal(first.nodes, second.nodes), "nodes should not change between constructions"
    assert np.array_equal(first.weights, second.weights), "weights should not change between constructions"


@pytest.mark.parametrize("n", [0, -3, 2049, 2.5])
def test_order_out_of_range_is_rejected(n):
    with pytest.raises(InvalidArgumentError):
        gauss_legendre(n)


def test_map_rule_shifts_nodes():
    base = gauss_legendre(5)
    mapped = map_rule(base, 0.0, 2.0)
    assert np.allclose(mapped.nodes, base.nodes + 1.0, rtol=0, atol=1e-15), "nodes should shift by +1"
    assert np.allclose(mapped.weights, base.weights, rtol=0, atol=1e-15), "weights should be unchanged"


def test_map_rule_two_points_onto_unit_interval():
    mapped = map_rule(gauss_legendre(2), 0.0, 1.0)
    root = 1.0 / math.sqrt(3.0)
    assert np.allclose(mapped.nodes, [(1 - root) / 2, (1 + root) / 2], rtol=0, atol=1e-15), "mapped nodes"
    assert np.allclose(mapped.weights, [0.5, 0.5], rtol=0, atol=1e-15), "mapped weights"


def test_map_rule_weight_sum():
    mapped = map_rule(gauss_legendre(8), -3.0, 5.0)
    assert abs(mapped.weights.sum() - 8.0) < 1e-13, "weights should sum to 8"


@pytest.mark.parametrize("lo, hi", [(0.0, math.inf), (math.nan, 1.0), (2.0, 1.0)])
def test_map_rule_rejects_bad_intervals(lo, hi):
    with pytest.raises(InvalidArgumentError):
        map_rule(gauss_legendre(4), lo, hi)


def test_composite_rule_integrates_exponential():
    rule = composite_rule([0.0, 1.0, 3.0], 20)
    assert rule.order == 40, "two panels of 20 nodes"
    assert abs(rule.integrate(np.exp(rule.nodes)) - (math.exp(3.0) - 1.0)) < 1e-12, "integral of e^u on [0, 3]"


def test_composite_rule_needs_two_breakpoints():
    with pytest.raises(InvalidArgumentError):
        composite_rule([1.0], 8)
