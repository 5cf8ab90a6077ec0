"""Capital and labor output elasticities under constant returns to scale."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputOutputRow, ShareOutOfRange

DEFAULT_FAMILY_LABOR_FRACTION = 0.5
_CRS_TOL = 1e-12


@dataclass(frozen=True)
class FactorShares:
    alpha: float  # capital
    beta: float  # labor

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise ShareOutOfRange(f"{name}={value!r} outside [0, 1]")
        if abs(self.alpha + self.beta - 1.0) > _CRS_TOL:
            raise ShareOutOfRange(
                f"alpha + beta = {self.alpha + self.beta!r}, constant returns require 1"
            )


def fixed_shares(alpha: float) -> FactorShares:
    """Capital share ``alpha`` with labor share ``1 - alpha``."""
    alpha = float(alpha)
    if not (math.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise ShareOutOfRange(f"alpha={alpha!r} outside [0, 1]")
    return FactorShares(alpha, 1.0 - alpha)


@dataclass(frozen=True)
class InputOutputRow:
    """Income-side split of one sector's value-added."""

    compensation_of_employees: float
    mixed_income: float
    value_added: float

    def __post_init__(self) -> None:
        for name in ("compensation_of_employees", "mixed_income", "value_added"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputOutputRow(f"{name} is not finite")
        if self.value_added <= 0:
            raise InvalidInputOutputRow(f"value_added must be positive, got {self.value_added!r}")
        if self.compensation_of_employees < 0 or self.mixed_income < 0:
            raise InvalidInputOutputRow("income components must be non-negative")
        if self.compensation_of_employees + self.mixed_income > self.value_added:
            raise InvalidInputOutputRow(
                "compensation_of_employees + mixed_income "
                f"({self.compensation_of_employees + self.mixed_income!r}) "
                f"exceeds value_added ({self.value_added!r})"
            )


def labor_income(row: InputOutputRow, family_labor_fraction: float) -> float:
    """Compensation plus the part of mixed income attributed to family labor."""
    return row.compensation_of_employees + family_labor_fraction * row.mixed_income


def estimate_shares(
    row: InputOutputRow, family_labor_fraction: float = DEFAULT_FAMILY_LABOR_FRACTION
) -> FactorShares:
    """Labor share from the income side of an input-output row.

    Mixed income of unincorporated farms hides unpaid family labor, so
    ``family_labor_fraction`` of it is added to compensation of employees
    before dividing by value-added. Capital takes the remainder.

    >>> estimate_shares(InputOutputRow(30, 20, 100))
    FactorShares(alpha=0.6, beta=0.4)
    """
    fraction = float(family_labor_fraction)
    if not (math.isfinite(fraction) and 0.0 <= fraction <= 1.0):
        raise ShareOutOfRange(f"family_labor_fraction={fraction!r} outside [0, 1]")
    beta = labor_income(row, fraction) / row.value_added
    if not 0.0 <= beta <= 1.0:
        raise ShareOutOfRange(f"estimated labor share {beta!r} outside [0, 1]")
    return FactorShares(alpha=1.0 - beta, beta=beta)
