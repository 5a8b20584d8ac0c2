# config.py

"""
Module: config
Purpose:
    Settings of a command-line run. Values come from three layers, highest
    precedence first: command-line flags, a flat ``key = value`` config file,
    built-in defaults. Sweep axes are parsed here too.

    Key Features:
    - The config file has no section headers; one is prepended before it is
      handed to `configparser`.
    - Axis syntax: ``0,1,2`` (explicit list), ``lin:lo:hi:n`` or ``log:lo:hi:n``.
"""
import configparser
import logging
import math
from dataclasses import dataclass, fields
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np

from det_common.errors import InvalidArgumentError
from det_common.regime import RegimeConfig
from fredholm_engine.determinant import DEFAULT_ORDER, MAX_ORDER, STABILITY_TOL, DetOptions

logger = logging.getLogger(__name__)

_SECTION = "harness"
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class HarnessConfig:
    """
    Resolved settings shared by every subcommand.

    :param model: Model identifier passed to `load_model`.
    :param order: Starting quadrature order.
    :param max_order: Ceiling for order doubling.
    :param tol: Order-doubling stability tolerance.
    :param format: ``csv`` or ``json``.
    :param out: Output path; ``None`` writes to stdout.
    :param jobs: Worker processes for sweeps.
    :param delta: Regime threshold on xt.
    :param big_k: Regime threshold on x.
    :param big_m: Tracy-Widom window width.
    :param log_level: Level name for `configure_logging`.
    """

    model: str = "kpz"
    order: int = DEFAULT_ORDER
    max_order: int = MAX_ORDER
    tol: float = STABILITY_TOL
    format: str = "csv"
    out: Optional[str] = None
    jobs: int = 1
    delta: float = 0.25
    big_k: float = 8.0
    big_m: float = 4.0
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InvalidArgumentError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.jobs < 1:
            raise InvalidArgumentError(f"jobs must be at least 1, got {self.jobs!r}")

    def det_options(self) -> DetOptions:
        return DetOptions(order=self.order, refine=True, max_order=max(self.max_order, self.order), tol=self.tol)

    def regime(self) -> RegimeConfig:
        return RegimeConfig(delta=self.delta, big_k=self.big_k, big_m=self.big_m)


_FIELD_TYPES = {f.name: f.type for f in fields(HarnessConfig)}


def _convert(key: str, raw: Any) -> Any:
    kind = _FIELD_TYPES[key]
    if raw is None:
        return None
    try:
        if kind is int:
            return int(raw)
        if kind is float:
            return float(raw)
    except (TypeError, ValueError):
        raise InvalidArgumentError(f"config value {key} = {raw!r} is not a valid {kind.__name__}") from None
    return str(raw)


def read_config_file(path: str) -> Dict[str, str]:
    """
    Read a flat ``key = value`` file.

    :raises InvalidArgumentError: On unreadable files, syntax errors or unknown keys.
    """
    parser = configparser.ConfigParser()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            parser.read_string(f"[{_SECTION}]\n" + handle.read(), source=path)
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read config file {path}: {exc}") from None
    except configparser.Error as exc:
        raise InvalidArgumentError(f"malformed config file {path}: {exc}") from None
    values = dict(parser[_SECTION])
    unknown = sorted(set(values) - set(_FIELD_TYPES))
    if unknown:
        raise InvalidArgumentError(f"unknown keys in {path}: {', '.join(unknown)}")
    logger.debug("config file %s sets %s", path, ", ".join(sorted(values)))
    return values


def resolve_config(flags: Mapping[str, Any], file_values: Optional[Mapping[str, str]] = None) -> HarnessConfig:
    """
    Merge flags over file values over defaults. Flags equal to ``None`` are unset.
    """
    merged: Dict[str, Any] = {}
    for key in _FIELD_TYPES:
        if flags.get(key) is not None:
            merged[key] = _convert(key, flags[key])
        elif file_values and key in file_values:
            merged[key] = _convert(key, file_values[key])
    return HarnessConfig(**merged)


def parse_axis(text: str, name: str, positive: bool = False) -> Tuple[float, ...]:
    """
    Parse one sweep axis.

    :param text: ``a,b,c``, ``lin:lo:hi:n`` or ``log:lo:hi:n``.
    :param name: Axis name for error messages.
    :param positive: Require every value to be > 0.
    """
    text = text.strip()
    try:
        if text.startswith(("lin:", "log:")):
            kind, lo, hi, count = text.split(":")
            lo, hi, count = float(lo), float(hi), int(count)
            if count < 1:
                raise InvalidArgumentError(f"axis {name} needs at least one point")
            if kind == "log":
                if lo <= 0 or hi <= 0:
                    raise InvalidArgumentError(f"log axis {name} needs positive ends")
                values = np.geomspace(lo, hi, count)
            else:
                values = np.linspace(lo, hi, count)
        else:
            values = np.array([float(v) for v in text.split(",") if v.strip()])
    except ValueError:
        raise InvalidArgumentError(f"cannot parse axis {name}={text!r}") from None
    if values.size == 0:
        raise InvalidArgumentError(f"axis {name} is empty")
    if not all(math.isfinite(v) for v in values):
        raise InvalidArgumentError(f"axis {name} has non-finite values")
    if positive and np.any(values <= 0):
        raise InvalidArgumentError(f"axis {name} must be positive")
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class SweepSpec:
    """
    A rectangular grid, either in (x, t) or in the tail coordinates (s, T).

    :param first: x values, or s values when ``tail_axes``.
    :param second: t values, or T values when ``tail_axes``.
    :param model: Model identifier.
    :param tail_axes: Whether the axes are (s, T).
    """

    first: Tuple[float, ...]
    second: Tuple[float, ...]
    model: str = "kpz"
    tail_axes: bool = False

    def __post_init__(self):
        if not self.first or not self.second:
            raise InvalidArgumentError("sweep axes must be non-empty")
        if any(v <= 0 for v in self.second):
            raise InvalidArgumentError("the time axis must be positive")
        if self.tail_axes and any(v <= 0 for v in self.first):
            raise InvalidArgumentError("the s axis must be positive")

    def points(self):
        """Grid points in row order: the second axis varies fastest."""
        return [(a, b) for a in self.first for b in self.second]
