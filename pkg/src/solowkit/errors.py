"""Exception hierarchy.

Every error raised on bad input derives from :class:`GrowthAccountingError`;
the CLI maps that base class to the data/validation exit status.
"""

from __future__ import annotations


class GrowthAccountingError(Exception):
    """Base class for all data and validation errors."""


class ParseError(GrowthAccountingError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}: "
        elif where:
            where += " "
        super().__init__(f"{where}{message}")


# series

class NonContiguousYears(GrowthAccountingError):
    def __init__(self, year: int, reason: str = "missing"):
        self.year = year
        self.reason = reason
        super().__init__(f"non-contiguous years: {reason} year {year}")


class NonPositiveLevel(GrowthAccountingError):
    def __init__(self, year: int | None, field: str, value: float):
        self.year = year
        self.field = field
        self.value = value
        at = f" in {year}" if year is not None else ""
        super().__init__(f"{field}{at} must be a positive finite level, got {value!r}")


class TooShort(GrowthAccountingError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"need at least 2 annual observations, got {n}")


class PeriodOutOfRange(GrowthAccountingError):
    pass


class EmptyPeriod(GrowthAccountingError):
    pass


class EmptyInput(GrowthAccountingError):
    pass


# shares

class ShareOutOfRange(GrowthAccountingError):
    pass


class InvalidInputOutputRow(GrowthAccountingError):
    pass


# decomposition

class ZeroGrowthDenominator(GrowthAccountingError):
    pass


class FieldMismatch(GrowthAccountingError):
    pass


# plan evaluation

class PeriodMismatch(GrowthAccountingError):
    pass


class NoTargets(GrowthAccountingError):
    pass


class MissingRealizedValue(GrowthAccountingError):
    pass
