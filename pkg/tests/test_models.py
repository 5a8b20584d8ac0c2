# test_models.py

import math

import numpy as np
import pytest
from scipy.special import expit

from det_common.errors import InvalidArgumentError, ModelNotAdmissibleError
from quadrature_airy.gauss_legendre import gauss_legendre, map_rule
from sigma_models.models import (
    LaplaceMeasureSpec,
    ModelKind,
    build_model,
    j_sigma,
    kpz_constants,
    laplace_from_pairs,
    make_cutoff_model,
    make_kpz_model,
    make_laplace_model,
    make_zero_model,
    model_constants,
)


def test_kpz_model_values():
    model = make_kpz_model()
    assert float(model.sigma(0.0)) == 0.5, "sigma(0) should be 1/2"
    assert abs(float(model.log_f(0.0)) - math.log(2.0)) < 1e-15, "log F(0) should be log 2"
    assert (model.c_plus, model.c_plus_prime, model.c_minus, model.c_minus_prime, model.epsilon) == (1, 1, 1, 1, 1), \
        "all logistic constants are 1"
    assert model.admissible, "the logistic weight is admissible"


def test_kpz_derivatives_are_analytic():
    model = make_kpz_model()
    r = np.linspace(-5.0, 5.0, 11)
    h = 1e-6
    numeric = (model.log_f(r + h) - model.log_f(r - h)) / (2 * h)
    assert np.allclose(model.log_f_d1(r), numeric, atol=1e-9), "first derivative should be expit"
    assert np.allclose(model.log_f_d2(r), expit(r) * expit(-r), atol=1e-15), "second derivative"
    numeric3 = (model.log_f_d2(r + h) - model.log_f_d2(r - h)) / (2 * h)
    assert np.allclose(model.log_f_d3(r), numeric3, atol=1e-9), "third derivative"


def test_kpz_excess_does_not_overflow():
    model = make_kpz_model()
    assert float(model.log_f_excess(800.0)) == 0.0, "log F - r should vanish far right"
    assert float(model.log_f(-800.0)) == 0.0, "log F should vanish far left"
    assert math.isfinite(float(model.log_f(800.0))), "log F must stay finite"


def test_laplace_kpz_measure_matches_kpz_model():
    kpz = make_kpz_model()
    laplace = laplace_from_pairs([(1.0, 1.0)])
    r = np.linspace(-10.0, 10.0, 201)
    assert np.allclose(laplace.sigma(r), kpz.sigma(r), rtol=0, atol=1e-15), "sigma should agree pointwise"
    assert np.allclose(laplace.log_f(r), kpz.log_f(r), rtol=1e-15, atol=1e-15), "log F should agree pointwise"
    assert np.allclose(laplace.log_f_d2(r), kpz.log_f_d2(r), rtol=0, atol=1e-14), "(log F)'' should agree"
    assert np.allclose(laplace.log_f_d3(r), kpz.log_f_d3(r), rtol=0, atol=1e-14), "(log F)''' should agree"


def test_laplace_constants_distinct_ends():
    model = laplace_from_pairs([(0.5, 0.5), (1.0, 2.0)])
    assert model.c_plus == 1.0 and model.c_plus_prime == 2.0, "c_+ and c'_+ come from the last atom"
    assert model.c_minus == 0.5 and model.c_minus_prime == 0.5, "c_- and c'_- come from the first atom"
    assert model.epsilon == 0.5, "epsilon is the gap below c_+"


def test_laplace_constants_degenerate_ends():
    model = laplace_from_pairs([(0.7, 1.0), (1.0, 1.0), (1.0, 1.0)])
    assert model.c_plus_prime == 2.0, "atoms at c_+ add up"


@pytest.mark.parametrize("atoms", [(), ((1.0, -1.0),), ((0.0, 1.0),), ((1.0, 1.0), (0.5, 1.0))])
def test_invalid_laplace_specs(atoms):
    with pytest.raises(InvalidArgumentError):
        LaplaceMeasureSpec(atoms)


def test_cutoff_model():
    model = make_cutoff_model()
    assert float(model.sigma(-1.0)) == 0.0 and float(model.sigma(1.0)) == 1.0, "Heaviside values"
    assert not model.admissible, "the cutoff is not admissible"
    with pytest.raises(ModelNotAdmissibleError):
        j_sigma(model)


def test_zero_model():
    model = make_zero_model()
    assert model.kind is ModelKind.ZERO, "kind flag"
    assert not np.any(model.sigma(np.linspace(-5, 5, 11))), "sigma is identically 0"


def test_j_sigma_kpz():
    assert abs(j_sigma(make_kpz_model()) + math.pi / 12.0) < 1e-10, "j_sigma(KPZ) = -pi/12"


def test_j_sigma_against_brute_force_quadrature():
    base = gauss_legendre(2048)
    left, right = map_rule(base, -80.0, 0.0), map_rule(base, 0.0, 80.0)
    total = left.integrate(np.logaddexp(0.0, left.nodes)) + right.integrate(np.logaddexp(0.0, -right.nodes))
    assert abs(j_sigma(make_kpz_model()) + total / (2 * math.pi)) < 1e-10, "matches the brute-force oracle"


def test_j_sigma_rate_scaling():
    rate_two = laplace_from_pairs([(2.0, 1.0)])
    assert abs(j_sigma(rate_two) + math.pi / 24.0) < 1e-9, "F = 1 + e^{2z} gives -pi/24"
    assert abs(j_sigma(rate_two) - j_sigma(make_kpz_model()) / 2.0) < 1e-9, "halving under r -> r/2"


def test_model_constants():
    computed = model_constants(make_kpz_model())
    assert abs(computed.big_c + 1.0 / 6.0) < 1e-10, "C(KPZ) = -1/6"
    assert abs(kpz_constants().big_c + 1.0 / 6.0) < 1e-15, "exact constants give -1/6"
    assert kpz_constants().log_c_prime == 0.0, "log c'_+ = 0 for KPZ"


def test_build_model_finite_difference_fallback():
    model = build_model("fd_kpz", expit, lambda r: np.logaddexp(0.0, r), 1.0, 1.0, 1.0, 1.0, 1.0)
    r = np.array([-2.0, 0.0, 1.0, 3.0])
    exact = make_kpz_model()
    assert np.allclose(model.log_f_d1(r), exact.log_f_d1(r), atol=1e-9), "first derivative fallback"
    assert np.allclose(model.log_f_d2(r), exact.log_f_d2(r), atol=1e-6), "second derivative fallback"
    assert np.allclose(model.log_f_d3(r), exact.log_f_d3(r), atol=1e-5), "third derivative fallback"
    assert np.allclose(model.log_f_excess(r), exact.log_f_excess(r), atol=1e-14), "excess fallback"
