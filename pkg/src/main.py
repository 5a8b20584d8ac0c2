# main.py

"""
Module: main
Purpose:
    Entry point of the ``airy-det`` console script. Parses the command line,
    resolves settings (flags over config file over defaults), installs logging
    and runs the chosen subcommand.

    Exit codes:
    - 0: success (for ``verify``: every check passed).
    - 2: invalid arguments, unknown model or unparsable files.
    - 3: numeric failure, or a failed verification check.
    - 4: output could not be written.
"""
import logging
import sys
from typing import List, Optional

from cli_harness.commands import parse_args
from cli_harness.config import read_config_file, resolve_config
from det_common.errors import DeterminantToolkitError
from det_common.logs import configure_logging

logger = logging.getLogger("main")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one ``airy-det`` command.

    :param argv: Arguments without the program name; defaults to ``sys.argv[1:]``.
    :return: The process exit code.
    """
    args = parse_args(argv)
    try:
        file_values = read_config_file(args.config) if args.config else None
        config = resolve_config(vars(args), file_values)
        configure_logging(config.log_level)
        logger.debug("running %s with %s", args.command, config)
        return args.handler(args, config)
    except DeterminantToolkitError as exc:
        print(f"airy-det {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
