# test_determinant.py

import math
from dataclasses import replace

import numpy as np
import pytest

from asymptotics.small_time import deep_tail_partial, tw_tail
from det_common.errors import InvalidArgumentError, ModelNotAdmissibleError, NearSingularError
from fredholm_engine.determinant import (
    DetJob,
    DetOptions,
    airy_cutoff,
    log_q_at,
    log_q_finite_temp,
    log_q_sigma,
    log_tracy_widom,
)
from sigma_models.models import make_cutoff_model, make_kpz_model, make_zero_model

KPZ = make_kpz_model()


def test_zero_model_is_identically_zero():
    result = log_q_at(make_zero_model(), 1.5, 0.7)
    assert result.log_det == 0.0, "zero weight should give log det 0"
    assert result.stable, "zero weight result should be flagged stable"


def test_far_left_shift_decays():
    assert abs(log_q_at(KPZ, -20.0, 1.0).log_det) < 1e-6, "log Q(-20, 1) should vanish"
    assert abs(log_q_at(KPZ, -8.0, 1.0).log_det) < 1e-3, "log Q(-8, 1) should be small"


def test_spectrum_and_sign():
    for x, t in ((-2.0, 1.0), (0.0, 1.0), (2.0, 0.5), (4.0, 2.0)):
        result = log_q_at(KPZ, x, t)
        assert result.eig_min > -1e-10, f"negative eigenvalue at ({x}, {t})"
        assert result.eig_max < 1.0, f"eigenvalue reaches 1 at ({x}, {t})"
        assert result.log_det <= 0.0, f"positive log det at ({x}, {t})"
        assert result.stable, f"order doubling did not settle at ({x}, {t})"
        assert result.trunc_estimate < 1e-8, f"truncation estimate too large at ({x}, {t})"


def test_monotone_in_x():
    values = [log_q_at(KPZ, float(x), 1.0).log_det for x in np.linspace(-2.0, 4.0, 10)]
    assert all(b <= a + 1e-10 for a, b in zip(values, values[1:])), "log Q should decrease in x"


def test_order_doubling_agrees():
    fixed = DetOptions(order=200, refine=False, max_order=400)
    coarse = log_q_at(KPZ, 2.0, 1.0, fixed).log_det
    fine = log_q_at(KPZ, 2.0, 1.0, replace(fixed, order=400)).log_det
    assert abs(coarse - fine) < 1e-8, "orders 200 and 400 should agree"


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("x", [0.0, 1.0, 2.0])
def test_finite_temperature_representation(x, t):
    direct = log_q_at(KPZ, x, t).log_det
    other = log_q_finite_temp(x, t).log_det
    assert abs(direct - other) <= 1e-6, f"representations differ at ({x}, {t}): {direct} vs {other}"


def test_finite_temperature_representation_small_time():
    direct = log_q_at(KPZ, 0.2, 1e-3).log_det
    other = log_q_finite_temp(0.2, 1e-3).log_det
    assert abs(direct - other) < 1e-5 * max(1.0, abs(direct)), f"representations differ: {direct} vs {other}"


def test_tracy_widom_right_tail():
    assert abs(log_tracy_widom(8.0).log_det) < 1e-8, "F_TW(8) should be 1"


def test_tracy_widom_left_tail():
    gaps = [abs(log_tracy_widom(-m).log_det - tw_tail(m)) for m in (6.0, 7.0, 8.0)]
    assert gaps[-1] < 2e-2, f"F_TW(-8) too far from its tail: {gaps[-1]}"
    assert gaps[0] > gaps[1] > gaps[2], f"tail gap should shrink with m: {gaps}"


def test_tracy_widom_below_double_precision():
    with pytest.raises(NearSingularError):
        log_tracy_widom(-30.0)


def test_deep_tail_partial_sum():
    for x in (0.1, 0.2, 0.3):
        t = (x / 10.0) ** 3
        gap = abs(log_q_at(KPZ, x, t).log_det - deep_tail_partial(x, t))
        assert gap < 0.1, f"deep-tail gap {gap} at x={x}"


def test_cutoff_weight_not_admissible():
    with pytest.raises(ModelNotAdmissibleError):
        log_q_at(make_cutoff_model(), 1.0, 1.0)


def test_auto_job_layout():
    job = DetJob.auto(KPZ, 2.0, 1.0)
    assert job.center == -2.0, "layer centre should sit at -x t^{-1/3}"
    assert job.trunc_lo == -42.0, "left end should be 40 scale units before the centre"
    assert job.trunc_hi == airy_cutoff(), "right end should be the Airy cutoff"
    points = job.breakpoints()
    assert points == sorted(points) and points[0] == job.trunc_lo and points[-1] == job.trunc_hi, \
        "breakpoints should be increasing and span the domain"
    assert float(job.r(np.array(job.center))) == 0.0, "r should vanish at the centre"


def test_explicit_job_matches_auto():
    job = DetJob.auto(KPZ, 1.0, 1.0)
    assert log_q_sigma(job).log_det == log_q_at(KPZ, 1.0, 1.0).log_det, "same job should give same value"


def test_invalid_inputs():
    with pytest.raises(InvalidArgumentError):
        DetOptions(order=4)
    with pytest.raises(InvalidArgumentError):
        DetOptions(order=400, max_order=200)
    with pytest.raises(InvalidArgumentError):
        DetJob(KPZ, 1.0, 1.0, 5.0, 5.0)
    with pytest.raises(InvalidArgumentError):
        DetJob.auto(KPZ, 1.0, 0.0)
    with pytest.raises(InvalidArgumentError):
        log_q_at(KPZ, math.nan, 1.0)
    with pytest.raises(InvalidArgumentError):
        log_tracy_widom(math.inf)
    with pytest.raises(InvalidArgumentError):
        log_q_finite_temp(1.0, -1.0)
