"""Error hierarchy shared by the library and the command line front end.

Each class carries the process exit code the CLI maps it to, so library
code can raise the precise failure category and the front end stays thin.
"""

from __future__ import annotations


class TensorConeError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 4


class ConfigError(TensorConeError):
    """Invalid user input: unknown Cartan type, bad rank, empty complement."""

    exit_code = 2


class BudgetError(TensorConeError):
    """A configured resource cap (rank, tuple count, dimension) was exceeded."""

    exit_code = 3


class ConsistencyError(TensorConeError):
    """An internal cross-check failed; indicates a bug, never bad input."""

    exit_code = 4


class VerificationFailure(TensorConeError):
    """An oracle cross-validation found a genuine discrepancy."""

    exit_code = 1
