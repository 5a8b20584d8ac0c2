# verify.py

"""
Module: verify
Purpose:
    Cross-verification suites: each check measures one deviation, compares it
    with a tolerance and records the runtime. A suite passes when every check
    does.

    Suites:
    - identities: closed-form identities between the shape functions.
    - props: structural properties of the discretized determinant.
    - determinants: determinants against their asymptotic formulas.
    - endpoints: rates of the steepest-descent coefficients.
    - tails: the KPZ tail function against the determinant.
"""
import logging
import math
import time
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from asymptotics.expansions import (
    consistency_identities,
    logq_asymptotic,
    logq_kpz_asymptotic,
    scaled_y,
    u_asymptotic,
)
from asymptotics.shapes import big_f1, big_f2, shape_a0, shape_a1, shape_a2
from asymptotics.small_time import deep_tail_partial, tw_tail
from cli_harness.config import HarnessConfig, SweepSpec
from cli_harness.records import Record, render
from cli_harness.sweep import run_sweep
from det_common.errors import DeterminantToolkitError, InvalidArgumentError
from det_common.regime import RegimeConfig
from fredholm_engine.derived import kdv_residual, u_sigma_fd
from fredholm_engine.determinant import DetOptions, log_q_at, log_q_finite_temp, log_tracy_widom
from kpz_tails.tails import (
    big_g,
    coordinates,
    inverse_coordinates,
    lower_bound_log_prob,
    optimal_upper_bound,
    upper_bound_log_prob,
)
from rh_scalars.large_xt import (
    endpoint_a_expansion,
    f_coeffs_large,
    f_ratio_limit,
    g1_large,
    solve_endpoint_a,
    x2g_expansion,
)
from rh_scalars.small_xt import alpha_endpoint, chi, d1
from sigma_models.models import (
    j_sigma,
    kpz_constants,
    laplace_from_pairs,
    make_kpz_model,
    make_zero_model,
    model_constants,
)

logger = logging.getLogger(__name__)

SUITES = ("identities", "props", "determinants", "endpoints", "tails")
RATE_FACTOR = 4.0
DOUBLING_SWEEP = (10.0, 20.0, 40.0)

Measurement = Tuple[float, float]


@dataclass(frozen=True)
class CheckResult:
    """
    :param name: ``suite.check``.
    :param status: ``pass``, ``fail`` or ``error``.
    :param value: Measured deviation.
    :param tolerance: Largest accepted deviation.
    :param runtime: Seconds spent.
    :param detail: Error text for ``error`` checks.
    """

    name: str
    status: str
    value: float
    tolerance: float
    runtime: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_record(self) -> Record:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "status": c.status, "value": c.value, "tolerance": c.tolerance,
                 "runtime": c.runtime, "detail": c.detail}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return render([self.to_record()], "json", single=True)


def _kpz():
    return make_kpz_model()


def _laplace():
    # c'_+ = 3: two atoms at the same location add up
    return laplace_from_pairs([(1.0, 2.0), (1.0, 1.0)], name="laplace_c3")


def _growth(values: Sequence[float]) -> float:
    """Largest |v_k| / |v_0|; bounded sweeps stay below a fixed factor."""
    first = abs(values[0])
    if first == 0.0:
        return math.inf if any(v != 0.0 for v in values) else 1.0
    return max(abs(v) for v in values) / first


# identities


def check_consistency() -> Measurement:
    worst = 0.0
    for model, constants in ((_kpz(), kpz_constants()), (_laplace(), None)):
        k = constants if constants is not None else model_constants(model)
        for x in np.geomspace(1.0, 50.0, 10):
            for t in np.geomspace(0.01, 2.0, 10):
                x, t = float(x), float(t)
                y = scaled_y(x, t, k.c_plus)
                res1, res2, res3 = consistency_identities(y, x, t, model, k)
                scales = (max(1.0, x / (2.0 * t)),
                          max(1.0, abs(shape_a1(y, k.c_plus_prime)) / (2.0 * math.sqrt(x * t))),
                          max(1.0, math.sqrt(t) / (2.0 * x ** 1.5)
                              * abs(shape_a2(y, k.c_plus, k.c_plus_prime, k.j_sigma))))
                worst = max(worst, *(abs(r) / s for r, s in zip((res1, res2, res3), scales)))
    return worst, 1e-11


def check_f2_derivative() -> Measurement:
    worst = 0.0
    for y in (0.05, 0.5, 5.0, 50.0):
        h = 1e-3 * max(1.0, y)
        fd = (big_f1(y - 2 * h) - 8 * big_f1(y - h) + 8 * big_f1(y + h) - big_f1(y + 2 * h)) / (12 * h)
        worst = max(worst, abs(fd - big_f2(y)) / abs(big_f2(y)))
    return worst, 1e-8


def check_a0_alpha() -> Measurement:
    worst = 0.0
    for c in (1.0, 2.0):
        for xt in (0.01, 0.1, 0.3, 1.0, 5.0, 50.0):
            worst = max(worst, abs(shape_a0(math.pi ** 2 * xt / c ** 2) - xt * alpha_endpoint(xt, c)))
    return worst, 1e-12


def check_alpha_equation() -> Measurement:
    worst = 0.0
    for xt in (0.01, 0.1, 0.3, 1.0, 5.0):
        alpha = alpha_endpoint(xt, 1.0)
        worst = max(worst, abs(math.sqrt(alpha) / math.pi - (1.0 - alpha * xt) / 2.0))
    return worst, 1e-12


def check_kpz_specialization() -> Measurement:
    worst = 0.0
    for x, t in ((5.0, 0.2), (10.0, 0.5), (20.0, 1.0), (8.0, 2.0)):
        special = logq_kpz_asymptotic(x, t).total
        general = logq_asymptotic(x, t, _kpz(), kpz_constants()).total
        worst = max(worst, abs(special - general) / max(1.0, abs(general)))
    return worst, 1e-12


def check_g_identity() -> Measurement:
    worst = 0.0
    for s in (1.0, 2.0, 10.0):
        for big_t in (1.0, 4.0, 100.0):
            x, t = coordinates(s, big_t)
            g = big_g(s, big_t)
            worst = max(worst, abs(g + logq_kpz_asymptotic(x, t).total) / max(1.0, abs(g)))
    return worst, 1e-12


def check_kpz_constants() -> Measurement:
    k = kpz_constants()
    return max(abs(j_sigma(_kpz()) + math.pi / 12.0), abs(k.big_c + 1.0 / 6.0)), 1e-10


# props


def _x_sweep(t: float, opts: DetOptions) -> List[float]:
    return [log_q_at(_kpz(), float(x), t, opts).log_det for x in np.linspace(-2.0, 4.0, 10)]


def check_eigen_range(opts: DetOptions) -> Measurement:
    worst = 0.0
    for x, t in ((-2.0, 1.0), (0.0, 1.0), (2.0, 0.5), (4.0, 2.0)):
        result = log_q_at(_kpz(), x, t, opts)
        worst = max(worst, -result.eig_min, 0.0 if result.eig_max < 1.0 else math.inf)
    return worst, 1e-10


def check_log_nonpositive(opts: DetOptions) -> Measurement:
    return max(0.0, max(_x_sweep(1.0, opts))), 0.0


def check_monotone_in_x(opts: DetOptions) -> Measurement:
    values = _x_sweep(1.0, opts)
    return max(0.0, max(b - a for a, b in zip(values, values[1:]))), 1e-10


def check_order_doubling(opts: DetOptions) -> Measurement:
    fixed = replace(opts, refine=False)
    coarse = log_q_at(_kpz(), 2.0, 1.0, fixed).log_det
    fine = log_q_at(_kpz(), 2.0, 1.0, replace(fixed, order=2 * opts.order,
                                              max_order=max(fixed.max_order, 2 * opts.order))).log_det
    return abs(fine - coarse), 1e-8


RICHARDSON_STEPS = (0.2, 0.1, 0.05)


def richardson_ratio(x: float, t: float, opts: DetOptions) -> float:
    """(u_h - u_{h/2}) / (u_{h/2} - u_{h/4}); close to 16 for a fourth-order stencil."""
    coarse, middle, fine = (u_sigma_fd(_kpz(), x, t, h=h, opts=opts) for h in RICHARDSON_STEPS)
    return (coarse - middle) / (middle - fine)


def check_richardson(opts: DetOptions) -> Measurement:
    return abs(richardson_ratio(3.0, 1.0, opts) - 16.0), 4.0


def check_parallel_serial(config: HarnessConfig) -> Measurement:
    spec = SweepSpec((0.0, 1.0), (0.5, 1.0), model="kpz")
    serial = render(run_sweep(spec, replace(config, jobs=1)), "csv")
    parallel = render(run_sweep(spec, replace(config, jobs=2)), "csv")
    return (0.0 if serial == parallel else 1.0), 0.0


# determinants


def check_tracy_widom_tail(opts: DetOptions) -> Measurement:
    gaps = [abs(log_tracy_widom(-m, opts).log_det - tw_tail(m)) for m in (6.0, 7.0, 8.0)]
    improving = all(b <= a for a, b in zip(gaps, gaps[1:]))
    return (gaps[-1] if improving else math.inf), 2e-2


def check_representations(opts: DetOptions) -> Measurement:
    worst = 0.0
    for x in (0.0, 1.0, 2.0):
        for t in (0.5, 1.0, 2.0):
            worst = max(worst, abs(log_q_at(_kpz(), x, t, opts).log_det - log_q_finite_temp(x, t, opts).log_det))
    return worst, 1e-6


def check_logq_gap(opts: DetOptions) -> Measurement:
    return max(abs(log_q_at(_kpz(), x, 1.0, opts).log_det - logq_asymptotic(x, 1.0, _kpz(), kpz_constants()).total)
               for x in (4.0, 6.0, 8.0)), 3.0


def check_u_relative(opts: DetOptions) -> Measurement:
    worst = 0.0
    for x, t in ((6.0, 1.0), (8.0, 1.0), (4.0, 2.0)):
        expected = u_asymptotic(x, t, _kpz(), kpz_constants()).total
        worst = max(worst, abs(u_sigma_fd(_kpz(), x, t, opts=opts) - expected) / abs(expected))
    return worst, 0.05


def check_kdv(opts: DetOptions) -> Measurement:
    result = kdv_residual(_kpz(), 4.0, 1.0, opts=opts)
    return abs(result.residual) / max(1.0, abs(result.u)), 0.05


def check_kdv_trivial(opts: DetOptions) -> Measurement:
    return abs(kdv_residual(make_zero_model(), 1.5, 1.0, opts=opts).residual), 1e-8


def check_deep_tail(opts: DetOptions) -> Measurement:
    # t = (x / 10)^3 keeps the edge at m = x t^{-1/3} = 10, inside double precision
    return max(abs(log_q_at(_kpz(), x, (x / 10.0) ** 3, opts).log_det - deep_tail_partial(x, (x / 10.0) ** 3))
               for x in (0.1, 0.2, 0.3)), 0.1


# endpoints

_LARGE = RegimeConfig(delta=0.25, big_k=8.0)
_SMALL = RegimeConfig(delta=0.5, big_k=8.0)


def check_endpoint_residual() -> Measurement:
    worst = 0.0
    for x in DOUBLING_SWEEP:
        t = 5.0 / x
        solution = solve_endpoint_a(x, t, _kpz(), regime=_LARGE)
        worst = max(worst, abs(solution.residual) / (1.0 + math.pi * math.sqrt(x * t)))
    return worst, 1e-11


def check_endpoint_rate() -> Measurement:
    scaled = []
    for x in DOUBLING_SWEEP:
        t = 5.0 / x
        a = solve_endpoint_a(x, t, _kpz(), regime=_LARGE).a
        scaled.append(abs(a - endpoint_a_expansion(x, t, _kpz())) * x ** 6)
    return _growth(scaled), RATE_FACTOR


def check_d1_rate() -> Measurement:
    worst = 0.0
    for model in (_kpz(), _laplace()):
        log_c, j = math.log(model.c_plus_prime), j_sigma(model)
        scaled = []
        for x in DOUBLING_SWEEP:
            t = 0.5 / x
            root = math.sqrt(alpha_endpoint(0.5, model.c_plus))
            scaled.append((d1(x, t, model, regime=_SMALL) + root * log_c / math.pi - j / (x * x * root)) * x ** 4)
        worst = max(worst, _growth(scaled))
    return worst, RATE_FACTOR


def check_chi_rate() -> Measurement:
    worst = 0.0
    for model in (_kpz(), _laplace()):
        log_c = math.log(model.c_plus_prime)
        scaled = []
        for x in DOUBLING_SWEEP:
            t = 0.5 / x
            root = math.sqrt(alpha_endpoint(0.5, model.c_plus))
            scaled.append((chi(x, t, model, regime=_SMALL) + log_c / (math.pi * root)) * x * x)
        worst = max(worst, _growth(scaled))
    return worst, RATE_FACTOR


def check_x2g_rate() -> Measurement:
    scaled = []
    for x in DOUBLING_SWEEP:
        t = 5.0 / x
        g1 = g1_large(x, t, _kpz(), regime=_LARGE)
        scaled.append((x * x / t * (0.25 + g1) - x2g_expansion(x, t, _kpz())) * (x / t) ** 1.5)
    return _growth(scaled), RATE_FACTOR


def check_f_ratio_rate() -> Measurement:
    scaled = []
    for x in DOUBLING_SWEEP:
        t = 5.0 / x
        f1, f2 = f_coeffs_large(x, t, _kpz(), regime=_LARGE)
        limit = f_ratio_limit(math.pi ** 2 * x * t)
        scaled.append((-5.0 * f2 / (32.0 * f1 ** 2.5) - limit) * x ** 1.5 / math.sqrt(t))
    return _growth(scaled), RATE_FACTOR


# tails

_TAIL_GRID = [(s, big_t) for s in (1.0, 2.0, 3.0, 4.0) for big_t in (1.0, 4.0)]


def check_tail_gap(opts: DetOptions) -> Measurement:
    worst = 0.0
    for s, big_t in _TAIL_GRID:
        x, t = coordinates(s, big_t)
        worst = max(worst, abs(log_q_at(_kpz(), x, t, opts).log_det + big_g(s, big_t)))
    return worst, 3.0


def check_bounds_ordered() -> Measurement:
    return max(0.0, max(lower_bound_log_prob(s, big_t) - upper_bound_log_prob(s, big_t)
                        for s, big_t in _TAIL_GRID)), 0.0


def check_coordinate_roundtrip() -> Measurement:
    worst = 0.0
    for s, big_t in _TAIL_GRID + [(10.0, 100.0), (0.5, 1e4)]:
        s2, t2 = inverse_coordinates(*coordinates(s, big_t))
        worst = max(worst, abs(s2 - s) / s, abs(t2 - big_t) / big_t)
    return worst, 1e-14


def check_optimal_p() -> Measurement:
    ps = [optimal_upper_bound(s, 1.0)[0] for s in (10.0, 100.0, 1000.0)]
    return max(0.0, max(a - b for a, b in zip(ps, ps[1:]))), 0.0


def _registry(config: HarnessConfig) -> Dict[str, List[Tuple[str, Callable[[], Measurement]]]]:
    opts = config.det_options()
    return {
        "identities": [
            ("consistency", check_consistency),
            ("f2_derivative", check_f2_derivative),
            ("a0_alpha", check_a0_alpha),
            ("alpha_equation", check_alpha_equation),
            ("kpz_specialization", check_kpz_specialization),
            ("g_identity", check_g_identity),
            ("kpz_constants", check_kpz_constants),
        ],
        "props": [
            ("eigen_range", lambda: check_eigen_range(opts)),
            ("log_nonpositive", lambda: check_log_nonpositive(opts)),
            ("monotone_in_x", lambda: check_monotone_in_x(opts)),
            ("order_doubling", lambda: check_order_doubling(opts)),
            ("richardson", lambda: check_richardson(opts)),
            ("parallel_serial", lambda: check_parallel_serial(config)),
        ],
        "determinants": [
            ("tracy_widom_tail", lambda: check_tracy_widom_tail(opts)),
            ("representations", lambda: check_representations(opts)),
            ("logq_gap", lambda: check_logq_gap(opts)),
            ("u_relative", lambda: check_u_relative(opts)),
            ("kdv", lambda: check_kdv(opts)),
            ("kdv_trivial", lambda: check_kdv_trivial(opts)),
            ("deep_tail", lambda: check_deep_tail(opts)),
        ],
        "endpoints": [
            ("endpoint_residual", check_endpoint_residual),
            ("endpoint_rate", check_endpoint_rate),
            ("d1_rate", check_d1_rate),
            ("chi_rate", check_chi_rate),
            ("x2g_rate", check_x2g_rate),
            ("f_ratio_rate", check_f_ratio_rate),
        ],
        "tails": [
            ("tail_gap", lambda: check_tail_gap(opts)),
            ("bounds_ordered", check_bounds_ordered),
            ("coordinate_roundtrip", check_coordinate_roundtrip),
            ("optimal_p", check_optimal_p),
        ],
    }


def _run_check(name: str, check: Callable[[], Measurement]) -> CheckResult:
    start = time.perf_counter()
    try:
        value, tolerance = check()
    except DeterminantToolkitError as exc:
        logger.warning("check %s raised %s: %s", name, type(exc).__name__, exc)
        return CheckResult(name, "error", math.nan, math.nan, time.perf_counter() - start, str(exc))
    status = "pass" if value <= tolerance else "fail"
    elapsed = time.perf_counter() - start
    logger.info("check %s: %s (value %.3g, tolerance %.3g, %.2fs)", name, status, value, tolerance, elapsed)
    return CheckResult(name, status, float(value), float(tolerance), elapsed)


def run_suite(suite: str, config: HarnessConfig = HarnessConfig()) -> VerifyReport:
    """
    Run one suite, or every suite for ``all``.

    :raises InvalidArgumentError: For an unknown suite name.
    """
    registry = _registry(config)
    if suite == "all":
        names = SUITES
    elif suite in registry:
        names = (suite,)
    else:
        raise InvalidArgumentError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all")
    checks = tuple(_run_check(f"{name}.{check_name}", check)
                   for name in names for check_name, check in registry[name])
    return VerifyReport(suite, checks)
