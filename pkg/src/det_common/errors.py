# errors.py

"""
Module: errors
Purpose:
    One exception hierarchy for the whole toolkit. Every class carries the exit
    code the command-line front end returns when the error escapes a command.

    Key Features:
    - Library errors subclass the matching builtin (ValueError, ArithmeticError, ...)
      so callers that only know the builtin still catch them.
    - `EndpointBracketError` keeps the two end values of the failed bracket.
"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


class DeterminantToolkitError(Exception):
    """Base class for all toolkit errors."""

    exit_code = EXIT_NUMERIC


class InvalidArgumentError(DeterminantToolkitError, ValueError):
    """An argument is outside the documented domain of an operation."""

    exit_code = EXIT_USAGE


class ModelNotAdmissibleError(DeterminantToolkitError, ValueError):
    """A weight that fails the admissibility assumptions reached an operation requiring them."""

    exit_code = EXIT_USAGE


class ModelFileError(InvalidArgumentError):
    """
    A model file could not be parsed.

    :param path: File that was being read.
    :param line_number: 1-based line of the offending entry.
    :param reason: Human readable description.
    """

    def __init__(self, path: str, line_number: int, reason: str):
        self.path = path
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {reason}")


class NearSingularError(DeterminantToolkitError, ArithmeticError):
    """The discretized operator has an eigenvalue indistinguishable from 1."""

    exit_code = EXIT_NUMERIC


class EndpointBracketError(DeterminantToolkitError, RuntimeError):
    """
    The endpoint equation did not change sign over the bracket.

    :param lo: Left end of the bracket.
    :param hi: Right end of the bracket.
    :param h_lo: Equation value at `lo`.
    :param h_hi: Equation value at `hi`.
    """

    exit_code = EXIT_NUMERIC

    def __init__(self, lo: float, hi: float, h_lo: float, h_hi: float):
        self.lo, self.hi, self.h_lo, self.h_hi = lo, hi, h_lo, h_hi
        super().__init__(
            f"no sign change on [{lo!r}, {hi!r}]: h(lo)={h_lo!r}, h(hi)={h_hi!r}"
        )


class OutputError(DeterminantToolkitError, OSError):
    """Results could not be written."""

    exit_code = EXIT_IO


class CancellationWarning(UserWarning):
    """A finite-difference step is small enough for round-off to dominate."""
