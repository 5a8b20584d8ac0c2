# test_tails.py

import math

import pytest

from asymptotics.expansions import logq_kpz_asymptotic
from det_common.errors import InvalidArgumentError
from kpz_tails.tails import (
    TAIL_REGIMES,
    big_g,
    compare_g_with_determinant,
    coordinates,
    inverse_coordinates,
    lower_bound_log_prob,
    optimal_upper_bound,
    regime_expansion,
    tail_bounds,
    upper_bound_log_prob,
)


def test_coordinates_roundtrip():
    for s, big_t in ((1.0, 1.0), (10.0, 100.0), (0.5, 1e4)):
        s2, t2 = inverse_coordinates(*coordinates(s, big_t))
        assert abs(s2 - s) < 1e-14 * s and abs(t2 - big_t) < 1e-14 * big_t, f"roundtrip fails at ({s}, {big_t})"
    assert coordinates(1.0, 1.0) == (1.0, 1.0), "(1, 1) should map to itself"


def test_g_is_minus_the_kpz_expansion():
    for s in (1.0, 2.0, 10.0):
        for big_t in (1.0, 4.0, 100.0):
            g = big_g(s, big_t)
            expansion = logq_kpz_asymptotic(*coordinates(s, big_t)).total
            assert abs(g + expansion) < 1e-12 * max(1.0, abs(g)), f"G mismatch at ({s}, {big_t})"


def test_bounds_ordered():
    for s, big_t in ((1.0, 1.0), (4.0, 4.0), (10.0, 10.0)):
        bound = tail_bounds(s, big_t)
        assert bound.lower_log_prob < bound.upper_log_prob, f"bounds crossed at ({s}, {big_t})"
        assert bound.p_used == 1.0, "default exponent should be 1"
        assert bound.q_used == s ** 3.1 + big_t ** 0.1, "q should be s^{3+eps} + T^eps"


def test_constants_shift_bounds():
    base = tail_bounds(3.0, 2.0)
    shifted = tail_bounds(3.0, 2.0, d_plus=0.5, d_minus=-0.25)
    assert shifted.upper_log_prob == base.upper_log_prob + 0.5, "D_+ should add to the upper bound"
    assert shifted.lower_log_prob == base.lower_log_prob - 0.25, "D_- should add to the lower bound"


def test_optimal_p():
    ps = [optimal_upper_bound(s, 1.0)[0] for s in (10.0, 100.0, 1000.0)]
    assert ps[0] <= ps[1] <= ps[2], f"optimal p should grow with s: {ps}"
    p, bound = optimal_upper_bound(100.0, 1.0)
    assert 1.0 <= p <= 100.0 ** 3, "optimal p should stay on the search grid"
    assert bound <= upper_bound_log_prob(100.0, 1.0), "optimum cannot be worse than p = 1"
    assert optimal_upper_bound(0.5, 1.0)[0] == 1.0, "below s = 1 the grid is just p = 1"


def test_large_deviation_regime():
    # with s = y T^{2/3} the gap to -T^2 F_1 / pi^6 is constant up to log(T) / 12
    gaps = []
    for big_t in (1e3, 1e6):
        s = big_t ** (2.0 / 3.0)
        gaps.append(upper_bound_log_prob(s, big_t) - regime_expansion(s, big_t, "large_deviation")
                    + math.log(big_t) / 12.0)
    assert abs(gaps[0] - gaps[1]) < 1e-2, f"large-deviation gap drifts: {gaps}"


@pytest.mark.parametrize("s", [100.0, 400.0, 1600.0])
def test_deep_tail_regime(s):
    upper = upper_bound_log_prob(s, 1.0, p=s ** 1.5)
    ratio = (upper - regime_expansion(s, 1.0, "deep_tail")) / s ** 1.5
    assert 0.8 < ratio < 1.2, f"deep-tail remainder should be of order s^(3/2), got ratio {ratio}"


def test_crossover_regime():
    s, big_t = 2.0, 1e6
    gap = upper_bound_log_prob(s, big_t) - regime_expansion(s, big_t, "crossover_small")
    expected = 5.0 / 6.0 - math.log(math.pi ** 2 / 2.0) / 8.0
    assert abs(gap - expected) < 1e-2, f"crossover gap {gap}, expected {expected}"


def test_regime_names():
    assert TAIL_REGIMES == ("large_deviation", "deep_tail", "crossover_small")
    with pytest.raises(InvalidArgumentError):
        regime_expansion(1.0, 1.0, "moderate")


def test_invalid_arguments():
    with pytest.raises(InvalidArgumentError):
        upper_bound_log_prob(1.0, 1.0, p=0.5)
    with pytest.raises(InvalidArgumentError):
        lower_bound_log_prob(-1.0, 1.0)
    with pytest.raises(InvalidArgumentError):
        coordinates(1.0, 0.0)


def test_determinant_gap_stays_bounded():
    for s, big_t in ((1.0, 1.0), (2.0, 4.0), (4.0, 4.0)):
        gap = compare_g_with_determinant(s, big_t)
        assert abs(gap) < 3.0, f"log Q + G = {gap} at ({s}, {big_t})"
