"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CompanionError(Exception):
    """Base class for all errors raised by companionforms."""


class FieldMismatch(CompanionError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(CompanionError, ZeroDivisionError):
    pass


class ParseError(CompanionError, ValueError):
    pass


class DimensionMismatch(CompanionError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class BadBlockSize(DimensionMismatch):
    pass


class IndexOutOfRange(CompanionError, IndexError):
    pass


class NotBlockwiseCommuting(CompanionError, ValueError):
    pass


class BudgetExceeded(CompanionError, RuntimeError):
    pass


class InternalInconsistency(CompanionError, AssertionError):
    """Two criteria that must be equivalent disagreed.

    This always indicates a bug in the library, never bad user input.
    """
