# sweep.py

"""
Module: sweep
Purpose:
    Evaluate a grid of points, optionally in worker processes, and return one
    record per point in grid order.

    Workers receive small frozen tasks and rebuild the model from its identifier, so
    nothing unpicklable crosses the process boundary. Results are sorted by
    grid index before they are returned, which makes parallel and serial runs
    byte-identical.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List

from asymptotics.expansions import logq_asymptotic, u_asymptotic
from asymptotics.small_time import classify_regime
from cli_harness.config import HarnessConfig, SweepSpec
from cli_harness.records import Record
from det_common.errors import NearSingularError
from det_common.regime import RegimeConfig
from fredholm_engine.derived import u_sigma_fd
from fredholm_engine.determinant import DetOptions, log_q_at
from kpz_tails.tails import big_g, coordinates, lower_bound_log_prob, upper_bound_log_prob
from sigma_models.model_file import load_model

logger = logging.getLogger(__name__)

NAN = float("nan")


@dataclass(frozen=True)
class SweepTask:
    index: int
    model: str
    first: float
    second: float
    tail_axes: bool
    opts: DetOptions
    regime: RegimeConfig


def _xt_point(task: SweepTask) -> Record:
    x, t = task.first, task.second
    model = load_model(task.model)
    record: Record = {"index": task.index, "x": x, "t": t,
                      "regime": classify_regime(x, t, task.regime)}
    values = {"log_det": NAN, "order_used": 0, "stable": False, "logq_asymptotic": NAN,
              "gap": NAN, "u_fd": NAN, "u_asymptotic": NAN, "status": "ok"}
    try:
        result = log_q_at(model, x, t, task.opts)
        values.update(log_det=result.log_det, order_used=result.order_used, stable=result.stable)
        values["u_fd"] = u_sigma_fd(model, x, t, opts=task.opts)
        if model.admissible and x > 0:
            values["logq_asymptotic"] = logq_asymptotic(x, t, model).total
            values["gap"] = result.log_det - values["logq_asymptotic"]
            values["u_asymptotic"] = u_asymptotic(x, t, model).total
    except NearSingularError as exc:
        logger.warning("point %d (x=%g, t=%g): %s", task.index, x, t, exc)
        values["status"] = "near_singular"
    record.update(values)
    return record


def _tail_point(task: SweepTask) -> Record:
    s, big_t = task.first, task.second
    x, t = coordinates(s, big_t)
    model = load_model(task.model)
    g = big_g(s, big_t)
    record: Record = {"index": task.index, "s": s, "T": big_t, "x": x, "t": t,
                      "log_det": NAN, "big_g": g, "gap": NAN,
                      "lower_log_prob": lower_bound_log_prob(s, big_t),
                      "upper_log_prob": upper_bound_log_prob(s, big_t),
                      "status": "ok"}
    try:
        log_det = log_q_at(model, x, t, task.opts).log_det
        record.update(log_det=log_det, gap=log_det + g)
    except NearSingularError as exc:
        logger.warning("point %d (s=%g, T=%g): %s", task.index, s, big_t, exc)
        record["status"] = "near_singular"
    return record


def evaluate_task(task: SweepTask) -> Record:
    """Evaluate one grid point; runs in a worker process when jobs > 1."""
    return _tail_point(task) if task.tail_axes else _xt_point(task)


def build_tasks(spec: SweepSpec, config: HarnessConfig) -> List[SweepTask]:
    opts, regime = config.det_options(), config.regime()
    return [SweepTask(i, spec.model, a, b, spec.tail_axes, opts, regime)
            for i, (a, b) in enumerate(spec.points())]


def run_sweep(spec: SweepSpec, config: HarnessConfig) -> List[Record]:
    """
    Evaluate every grid point of ``spec``.

    :param spec: The grid.
    :param config: Supplies the discretization, regime constants and ``jobs``.
    :return: Records ordered by grid index.
    """
    tasks = build_tasks(spec, config)
    load_model(spec.model)  # fail fast on a bad identifier before spawning workers
    logger.info("sweeping %d points with %d job(s)", len(tasks), config.jobs)
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(config.jobs, len(tasks))) as pool:
            records = list(pool.map(evaluate_task, tasks))
    else:
        records = [evaluate_task(task) for task in tasks]
    return sorted(records, key=lambda r: r["index"])
