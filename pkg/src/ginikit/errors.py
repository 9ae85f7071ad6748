"""Exception hierarchy.

Every error raised by this package derives from :class:`GinikitError` so
callers can catch one type.  The subclasses split errors by *who got it
wrong*, which is also how the command line maps them to exit codes:

* :class:`DataError` -- the numeric payload is unusable (non-positive values,
  NaN, length mismatch, malformed input file).  CLI exit code 1.
* :class:`ParameterDomainError` -- an exponent, order or configuration value
  is outside its documented domain.  CLI exit code 2.
* :class:`HypothesisError` -- a requested inequality check does not satisfy
  the hypotheses under which the inequality is known to hold.  CLI exit
  code 2.
* :class:`OracleDomainError` -- input is valid for the fast path but outside
  the certified domain of the extended-precision reference evaluator.  CLI
  exit code 1.
"""

from __future__ import annotations


class GinikitError(Exception):
    """Base class for all errors raised by ginikit."""


class DataError(GinikitError):
    """Sample or dataset values are unusable."""


class IngestionError(DataError):
    """A file could not be parsed; carries the offending location."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParameterDomainError(GinikitError):
    """An exponent or configuration parameter is outside its domain."""


class HypothesisError(GinikitError):
    """An inequality check was requested outside its hypotheses."""


class OracleDomainError(GinikitError):
    """Input lies outside the certified domain of the reference evaluator."""
