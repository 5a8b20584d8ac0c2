# commands.py

"""
Module: commands
Purpose:
    The ``airy-det`` subcommands. Each handler takes the parsed arguments and
    the resolved `HarnessConfig`, writes its records and returns an exit code;
    errors propagate to `main`, which maps them to exit codes.

    Key Features:
    - Shared flags (model, order, output format and path, jobs, config file,
      log level) are accepted after any subcommand.
    - Point commands print one record; ``scan`` prints one record per grid
      point; ``verify`` prints a JSON report.
"""
import argparse
import logging
import math
from typing import Callable, List, Optional

from asymptotics.expansions import logq_asymptotic, logq_kpz_asymptotic, u_asymptotic
from asymptotics.small_time import classify_regime, tw_tail
from cli_harness.config import FORMATS, HarnessConfig, SweepSpec, parse_axis
from cli_harness.records import Record, as_record, flatten, write_records
from cli_harness.sweep import run_sweep
from cli_harness.verify import SUITES, run_suite
from det_common.errors import EXIT_NUMERIC, EXIT_OK, EndpointBracketError, InvalidArgumentError, NearSingularError
from fredholm_engine.derived import dlogq_dx_fd, u_sigma_fd
from fredholm_engine.determinant import log_q_at, log_tracy_widom
from kpz_tails.tails import TAIL_REGIMES, optimal_upper_bound, regime_expansion, tail_bounds
from rh_scalars.large_xt import dlogq_dx_large, endpoint_a_expansion, solve_endpoint_a, u_from_endpoint
from rh_scalars.small_xt import dlogq_dx_small, u_small_xt
from sigma_models.model_file import load_model

logger = logging.getLogger(__name__)

NAN = float("nan")


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise InvalidArgumentError(f"{args.command} needs {' and '.join(missing)}")


def _require_positive_t(t: float) -> None:
    if not (math.isfinite(t) and t > 0):
        raise InvalidArgumentError(f"t must be positive, got {t!r}")


def _write(records: List[Record], config: HarnessConfig, single: bool = True) -> int:
    write_records(records, config.format, config.out, single)
    return EXIT_OK


def _guarded(what: str, compute: Callable[[], float]) -> float:
    """Numeric failures of one optional column become NaN."""
    try:
        return compute()
    except (NearSingularError, EndpointBracketError) as exc:
        logger.warning("%s unavailable: %s", what, exc)
        return NAN


def cmd_det(args: argparse.Namespace, config: HarnessConfig) -> int:
    model = load_model(config.model)
    _require(args, "x", "t")
    _require_positive_t(args.t)
    result = log_q_at(model, args.x, args.t, config.det_options())
    record = as_record(result, model=model.name, x=args.x, t=args.t)
    if args.asymptotic:
        total = NAN
        if model.admissible and args.x > 0:
            total = logq_asymptotic(args.x, args.t, model).total
        record.update(logq_asymptotic=total, gap=result.log_det - total)
    return _write([record], config)


def cmd_scan(args: argparse.Namespace, config: HarnessConfig) -> int:
    if args.s is not None or args.T is not None:
        _require(args, "s", "T")
        spec = SweepSpec(parse_axis(args.s, "s", positive=True), parse_axis(args.T, "T", positive=True),
                         model=config.model, tail_axes=True)
    else:
        _require(args, "x", "t")
        spec = SweepSpec(parse_axis(args.x, "x"), parse_axis(args.t, "t", positive=True), model=config.model)
    return _write(run_sweep(spec, config), config, single=False)


def cmd_asymp(args: argparse.Namespace, config: HarnessConfig) -> int:
    model = load_model(config.model)
    _require(args, "x", "t")
    if args.what == "kpz":
        evaluation = logq_kpz_asymptotic(args.x, args.t)
    else:
        model.require_admissible(f"asymp --what {args.what}")
        evaluate = logq_asymptotic if args.what == "logq" else u_asymptotic
        evaluation = evaluate(args.x, args.t, model)
    record: Record = {"what": args.what, "model": model.name, "x": args.x, "t": args.t, "y": evaluation.y}
    record.update(flatten("term", evaluation.terms))
    record["total"] = evaluation.total
    return _write([record], config)


def cmd_endpoint(args: argparse.Namespace, config: HarnessConfig) -> int:
    model = load_model(config.model)
    _require(args, "x", "t")
    solution = solve_endpoint_a(args.x, args.t, model, regime=config.regime())
    expansion = endpoint_a_expansion(args.x, args.t, model)
    record = as_record(solution, model=model.name, x=args.x, t=args.t)
    record.update(expansion=expansion, gap=solution.a - expansion,
                  u_endpoint=args.x / (2.0 * args.t) * solution.a)
    return _write([record], config)


def cmd_tail(args: argparse.Namespace, config: HarnessConfig) -> int:
    _require(args, "s", "T")
    p = args.p
    if args.optimize:
        p, _ = optimal_upper_bound(args.s, args.T, args.d_plus)
    bound = tail_bounds(args.s, args.T, p=p, epsilon=args.epsilon, d_plus=args.d_plus, d_minus=args.d_minus)
    record = as_record(bound)
    record.update(flatten("expansion", {name: regime_expansion(args.s, args.T, name) for name in TAIL_REGIMES}))
    return _write([record], config)


def cmd_tw(args: argparse.Namespace, config: HarnessConfig) -> int:
    _require(args, "x")
    result = log_tracy_widom(args.x, config.det_options())
    tail = tw_tail(-args.x) if args.x < 0 else NAN
    record = as_record(result, x=args.x)
    record.update(tail_asymptotic=tail, gap=result.log_det - tail)
    return _write([record], config)


def cmd_compare(args: argparse.Namespace, config: HarnessConfig) -> int:
    model = load_model(config.model)
    _require(args, "x", "t")
    x, t = args.x, args.t
    if not (x > 0 and t > 0):
        raise InvalidArgumentError(f"compare needs x > 0 and t > 0, got x={x!r}, t={t!r}")
    model.require_admissible("compare")
    regime, opts = config.regime(), config.det_options()
    record: Record = {
        "model": model.name, "x": x, "t": t, "xt": x * t,
        "regime": classify_regime(x, t, regime), "overlap": regime.overlap(x, t),
        "u_fd": _guarded("u_fd", lambda: u_sigma_fd(model, x, t, opts=opts)),
        "u_small_xt": u_small_xt(x, t, model),
        "u_large_xt": _guarded("u_large_xt", lambda: u_from_endpoint(x, t, model, regime=regime)),
        "u_asymptotic": u_asymptotic(x, t, model).total,
        "dlogq_fd": _guarded("dlogq_fd", lambda: dlogq_dx_fd(model, x, t, opts=opts)),
        "dlogq_small_xt": dlogq_dx_small(x, t, model, regime=regime),
        "dlogq_large_xt": _guarded("dlogq_large_xt", lambda: dlogq_dx_large(x, t, model, regime=regime)),
    }
    return _write([record], config)


def cmd_verify(args: argparse.Namespace, config: HarnessConfig) -> int:
    report = run_suite(args.suite, config)
    write_records([report.to_record()], "json", config.out, single=True)
    failed = [c.name for c in report.checks if not c.passed]
    if failed:
        logger.error("verification failed: %s", ", ".join(failed))
        return EXIT_NUMERIC
    return EXIT_OK


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("common options")
    group.add_argument("--model", help="kpz, cutoff, zero or a model file (default kpz)")
    group.add_argument("--order", type=int, help="starting quadrature order per panel")
    group.add_argument("--max-order", dest="max_order", type=int, help="largest order tried when refining")
    group.add_argument("--tol", type=float, help="order-doubling agreement threshold")
    group.add_argument("--delta", type=float, help="xt threshold between the two regimes")
    group.add_argument("--big-k", dest="big_k", type=float, help="smallest x of the large-x regime")
    group.add_argument("--big-m", dest="big_m", type=float, help="half width of the Tracy-Widom window")
    group.add_argument("--format", choices=FORMATS, help="output format (default csv)")
    group.add_argument("--out", help="output file (default stdout)")
    group.add_argument("--jobs", type=int, help="worker processes for sweeps")
    group.add_argument("--config", help="flat key = value settings file")
    group.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR")
    group.add_argument("--seedless", action="store_true",
                       help="accepted for scripts; every computation is deterministic")
    return common


def build_parser() -> argparse.ArgumentParser:
    """The ``airy-det`` argument parser."""
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="airy-det",
        description="Deformed Airy-kernel determinants, their asymptotics and KPZ lower-tail bounds.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        command.set_defaults(handler=handler)
        return command

    det = add("det", cmd_det, "log Q(x, t) with discretization diagnostics")
    det.add_argument("--x", type=float)
    det.add_argument("--t", type=float)
    det.add_argument("--asymptotic", action="store_true", help="add the large-x expansion and the gap")

    scan = add("scan", cmd_scan, "sweep a grid in (x, t) or (s, T)")
    for name in ("x", "t", "s", "T"):
        scan.add_argument(f"--{name}", help="a,b,c or lin:lo:hi:n or log:lo:hi:n")

    asymp = add("asymp", cmd_asymp, "large-x expansions with their term breakdown")
    asymp.add_argument("--x", type=float)
    asymp.add_argument("--t", type=float)
    asymp.add_argument("--what", choices=("logq", "u", "kpz"), default="logq")

    endpoint = add("endpoint", cmd_endpoint, "endpoint a(x, t) of the large-xt analysis")
    endpoint.add_argument("--x", type=float)
    endpoint.add_argument("--t", type=float)

    tail = add("tail", cmd_tail, "KPZ lower-tail bounds at (s, T)")
    tail.add_argument("--s", type=float)
    tail.add_argument("--T", type=float)
    tail.add_argument("--p", type=float, default=1.0, help="upper-bound exponent, at least 1")
    tail.add_argument("--optimize", action="store_true", help="minimize the upper bound over p")
    tail.add_argument("--epsilon", type=float, default=0.1)
    tail.add_argument("--d-plus", dest="d_plus", type=float, default=0.0)
    tail.add_argument("--d-minus", dest="d_minus", type=float, default=0.0)

    tw = add("tw", cmd_tw, "log of the Tracy-Widom distribution at x")
    tw.add_argument("--x", type=float)

    compare = add("compare", cmd_compare, "small-xt and large-xt evaluators next to finite differences")
    compare.add_argument("--x", type=float)
    compare.add_argument("--t", type=float)

    verify = add("verify", cmd_verify, "run a cross-verification suite")
    verify.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
