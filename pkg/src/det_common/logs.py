# logs.py

"""
Module: logs
Purpose:
    Logging setup for the command-line entry point. Library modules only create
    named loggers; handlers are installed here, once.
"""
import logging
import sys

from det_common.errors import InvalidArgumentError

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """
    Route toolkit log records to stderr.

    :param level: Level name such as ``"DEBUG"`` or ``"WARNING"``.
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise InvalidArgumentError(f"unknown log level {level!r}")
    logging.basicConfig(stream=sys.stderr, level=numeric, format=LOG_FORMAT, force=True)
