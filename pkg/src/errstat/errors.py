"""Exception types shared across the package.

The CLI maps these onto process exit codes, so keep the hierarchy flat and
the meanings distinct: bad parameter values, mathematically infeasible
requests, degenerate data, and malformed input files.
"""


class ErrstatError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ErrstatError, ValueError):
    """An argument violates a precondition (wrong range, non-finite, ...)."""


class InfeasibleParameterError(ErrstatError, ValueError):
    """Parameters are individually valid but the requested quantity does not exist."""


class DegenerateDataError(ErrstatError, ValueError):
    """Data admits no answer: zero variance, perfect fit, undefined statistic."""


class CsvFormatError(ErrstatError, ValueError):
    """A CSV input file is malformed; message carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")
