"""Exception hierarchy shared across the package."""

from __future__ import annotations


class CubicFieldError(ValueError):
    """Base class for every domain error raised by :mod:`cubicfields`."""


class InvalidPrimeError(CubicFieldError):
    pass


class InvalidPairError(CubicFieldError):
    pass


class UndefinedSymbolError(CubicFieldError):
    pass


class NotAConductorError(CubicFieldError):
    pass


class InvalidSolutionError(CubicFieldError):
    pass


class DegenerateValuationError(CubicFieldError):
    pass


class InternalInconsistencyError(CubicFieldError):
    pass


class WrongArityError(CubicFieldError):
    pass


class PreconditionError(CubicFieldError):
    pass


class InvalidInputError(CubicFieldError):
    pass
