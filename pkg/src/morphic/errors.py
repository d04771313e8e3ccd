"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MorphicError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetMismatchError(MorphicError):
    pass


class BudgetExceededError(MorphicError):
    def __init__(self, requested: int, budget: int, what: str = "symbols"):
        super().__init__(f"{what}: {requested} exceeds budget {budget}")
        self.requested = requested
        self.budget = budget


class NotProlongableError(MorphicError):
    pass


class NotPrimitiveError(MorphicError):
    pass


class PrecisionError(MorphicError):
    """A floor value could not be decided at the stored precision."""


class AnalysisError(MorphicError, ValueError):
    """Bad arguments to an analyzer (range, size limits)."""


class DigitError(MorphicError, ValueError):
    pass


class ContradictionError(MorphicError):
    def __init__(self, rule, prop):
        super().__init__(f"P{prop} forced both ways by rule {rule}")
        self.rule = rule
        self.prop = prop


class ParseError(MorphicError):
    def __init__(self, kind: str, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {kind}: {message}")
        self.kind = kind
        self.line = line
        self.column = column
