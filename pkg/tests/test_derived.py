# test_derived.py

import pytest

from asymptotics.expansions import u_asymptotic
from det_common.errors import CancellationWarning, InvalidArgumentError
from fredholm_engine.derived import dlogq_dx_fd, kdv_residual, u_sigma_fd
from fredholm_engine.determinant import log_q_at
from sigma_models.models import kpz_constants, make_kpz_model, make_zero_model

KPZ = make_kpz_model()
ZERO = make_zero_model()


def test_zero_model_u_is_the_shift():
    assert u_sigma_fd(ZERO, 3.0, 2.0) == 3.0 / 4.0, "zero weight should give u = x / 2t"
    assert dlogq_dx_fd(ZERO, 3.0, 2.0) == 0.0, "zero weight has constant log Q"


def test_u_matches_large_x_expansion():
    u = u_sigma_fd(KPZ, 6.0, 1.0)
    expected = u_asymptotic(6.0, 1.0, KPZ, kpz_constants()).total
    assert abs(u - expected) < 0.05 * abs(expected), f"u(6, 1) = {u}, expansion {expected}"


def test_step_halving_is_consistent():
    coarse = u_sigma_fd(KPZ, 3.0, 1.0, h=0.05)
    fine = u_sigma_fd(KPZ, 3.0, 1.0, h=0.025)
    assert abs(coarse - fine) < 1e-6, f"u at h and h/2 differ by {abs(coarse - fine)}"


def test_step_halving_is_fourth_order():
    u = [u_sigma_fd(KPZ, 3.0, 1.0, h=h) for h in (0.2, 0.1, 0.05)]
    ratio = (u[0] - u[1]) / (u[1] - u[2])
    assert 12.0 < ratio < 20.0, f"difference ratio {ratio} should be near 16"


def test_first_derivative_against_secant():
    slope = dlogq_dx_fd(KPZ, 1.0, 1.0)
    secant = (log_q_at(KPZ, 1.1, 1.0).log_det - log_q_at(KPZ, 0.9, 1.0).log_det) / 0.2
    assert slope < 0.0, "log Q should decrease in x"
    assert abs(slope - secant) < 1e-2 * abs(slope), "derivative should match a wide secant"


def test_kdv_zero_model():
    result = kdv_residual(ZERO, 1.0, 1.0)
    assert abs(result.residual) < 1e-8, "zero weight should solve KdV exactly"
    assert result.u == 0.5, "u should be x / 2t for the zero weight"


def test_kdv_kpz_residual_small():
    result = kdv_residual(KPZ, 4.0, 1.0)
    assert abs(result.residual) < 0.05 * max(1.0, abs(result.u)), f"KdV residual {result.residual}"
    assert result.noise_floor > 0.0, "noise floor should be positive"


def test_kdv_residual_shrinks_with_steps():
    coarse = kdv_residual(KPZ, 4.0, 1.0, hx=0.1, ht=0.05)
    fine = kdv_residual(KPZ, 4.0, 1.0, hx=0.05, ht=0.025)
    assert abs(fine.residual) <= abs(coarse.residual) or fine.noise_dominated, \
        "halving the steps should not increase the residual"


def test_tiny_step_warns():
    with pytest.warns(CancellationWarning):
        u_sigma_fd(ZERO, 1.0, 1.0, h=1e-5)


def test_bad_steps():
    with pytest.raises(InvalidArgumentError):
        u_sigma_fd(ZERO, 1.0, 1.0, h=0.0)
    with pytest.raises(InvalidArgumentError):
        kdv_residual(ZERO, 1.0, 0.05, ht=0.05)
