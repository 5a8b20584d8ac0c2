# records.py

"""
Module: records
Purpose:
    Turn result records (ordered mappings of lower_snake_case field names to
    scalars) into CSV or JSON text and write it out.

    Key Features:
    - Floats are printed with 17 significant digits so files round-trip exactly
      and repeated runs produce identical bytes.
    - CSV uses ``\\n`` line endings and a header row naming the record fields
      in order. JSON is one object per record, an array for sweeps.
    - Non-finite floats are ``nan``/``inf``/``-inf`` in CSV and ``null`` in JSON.
"""
import csv
import io
import json
import logging
import math
import sys
from dataclasses import asdict, is_dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence

from det_common.errors import InvalidArgumentError, OutputError

logger = logging.getLogger(__name__)

Record = Dict[str, Any]


def format_float(value: float) -> str:
    """17 significant digits, locale independent."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if value is None:
        return ""
    return str(value)


def _json_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value) if math.isfinite(value) else "null"
    if value is None:
        return "null"
    if isinstance(value, Mapping):
        return _json_object(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    return json.dumps(str(value))


def _json_object(record: Mapping[str, Any]) -> str:
    return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in record.items()) + "}"


def flatten(prefix: str, values: Mapping[str, Any]) -> Record:
    """Prefix the keys of a nested mapping, e.g. term breakdowns."""
    return {f"{prefix}_{key}": value for key, value in values.items()}


def as_record(obj: Any, **extra: Any) -> Record:
    """A dataclass instance (or mapping) as a record, with ``extra`` fields first."""
    body = asdict(obj) if is_dataclass(obj) else dict(obj)
    record: Record = dict(extra)
    for key, value in body.items():
        if isinstance(value, (list, tuple)) and len(value) == 2 and key in ("bracket", "evaluated_at"):
            record[f"{key}_lo"], record[f"{key}_hi"] = value
        else:
            record[key] = value
    return record


def to_csv(records: Sequence[Mapping[str, Any]]) -> str:
    """
    :raises InvalidArgumentError: If records do not share one field list.
    """
    if not records:
        return ""
    header = list(records[0].keys())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for record in records:
        if list(record.keys()) != header:
            raise InvalidArgumentError("records in one CSV table must share the same fields")
        writer.writerow([_csv_cell(record[name]) for name in header])
    return buffer.getvalue()


def to_json(records: Sequence[Mapping[str, Any]], single: bool = False) -> str:
    if single and len(records) == 1:
        return _json_object(records[0]) + "\n"
    return "[\n" + ",\n".join("  " + _json_object(r) for r in records) + "\n]\n"


def render(records: Sequence[Mapping[str, Any]], fmt: str, single: bool = False) -> str:
    if fmt == "csv":
        return to_csv(records)
    if fmt == "json":
        return to_json(records, single)
    raise InvalidArgumentError(f"unknown output format {fmt!r}")


def emit(text: str, path: Optional[str] = None) -> None:
    """
    Write ``text`` to ``path``, or to stdout when no path is given.

    :raises OutputError: If the file cannot be written.
    """
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from None
    logger.info("wrote %d bytes to %s", len(text.encode("utf-8")), path)


def write_records(records: List[Record], fmt: str, path: Optional[str] = None, single: bool = False) -> None:
    emit(render(records, fmt, single), path)
