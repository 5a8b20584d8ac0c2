# __init__.py
"""Command-line front end: settings, record output, sweeps and verification suites."""
from cli_harness.commands import build_parser, parse_args
from cli_harness.config import HarnessConfig, SweepSpec, parse_axis, read_config_file, resolve_config
from cli_harness.records import format_float, render, to_csv, to_json
from cli_harness.sweep import run_sweep
from cli_harness.verify import SUITES, CheckResult, VerifyReport, run_suite

__all__ = [
    "CheckResult",
    "HarnessConfig",
    "SUITES",
    "SweepSpec",
    "VerifyReport",
    "build_parser",
    "format_float",
    "parse_args",
    "parse_axis",
    "read_config_file",
    "render",
    "resolve_config",
    "run_suite",
    "run_sweep",
    "to_csv",
    "to_json",
]
