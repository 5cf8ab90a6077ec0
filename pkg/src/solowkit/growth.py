"""Annual growth rates, partial productivities and period means.

All rates are in percent per year. Partial-productivity growth is the
difference between output growth and input growth (``q_hat - k_hat``), not
the percent change of the ratio ``Q/K``; with that definition the residual,
partial-productivity and decomposition identities hold exactly under either
growth convention.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from statistics import fmean
from typing import Callable, Iterable, Sequence

from .errors import EmptyInput, NonPositiveLevel
from .series import SectorSeries


class GrowthConvention(str, enum.Enum):
    DISCRETE_PERCENT = "discrete_percent"
    LOG_DIFFERENCE = "log_difference"


DEFAULT_CONVENTION = GrowthConvention.DISCRETE_PERCENT


def growth_rate(
    current: float,
    previous: float,
    convention: GrowthConvention | str = DEFAULT_CONVENTION,
) -> float:
    """Percent growth from ``previous`` to ``current``.

    >>> growth_rate(110, 100)
    10.0
    """
    convention = GrowthConvention(convention)
    for name, value in (("current", current), ("previous", previous)):
        if not (math.isfinite(value) and value > 0):
            raise NonPositiveLevel(None, name, value)
    if convention is GrowthConvention.LOG_DIFFERENCE:
        return 100.0 * math.log(current / previous)
    return 100.0 * (current - previous) / previous


@dataclass(frozen=True)
class GrowthRecord:
    year: int
    q_hat: float
    k_hat: float
    l_hat: float
    apk_hat: float = field(init=False)
    apl_hat: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "apk_hat", self.q_hat - self.k_hat)
        object.__setattr__(self, "apl_hat", self.q_hat - self.l_hat)


def growth_records(
    series: SectorSeries, convention: GrowthConvention | str = DEFAULT_CONVENTION
) -> list[GrowthRecord]:
    """One record per year, starting with the second observation."""
    records = []
    for prev, cur in zip(series.observations, series.observations[1:]):
        records.append(
            GrowthRecord(
                year=cur.year,
                q_hat=growth_rate(cur.value_added, prev.value_added, convention),
                k_hat=growth_rate(cur.capital_stock, prev.capital_stock, convention),
                l_hat=growth_rate(cur.employment, prev.employment, convention),
            )
        )
    return records


@dataclass(frozen=True)
class PartialProductivityLevel:
    year: int
    apk_level: float  # value-added per unit of capital
    apl_level: float  # value-added per worker


def partial_productivity_levels(series: SectorSeries) -> list[PartialProductivityLevel]:
    return [
        PartialProductivityLevel(
            o.year, o.value_added / o.capital_stock, o.value_added / o.employment
        )
        for o in series.observations
    ]


def mean_growth(records: Iterable, field: str | Callable[[object], float]) -> float:
    """Unweighted arithmetic mean of one per-year rate.

    ``field`` is an attribute name (``"apk_hat"``) or a callable. Any record
    type carrying that attribute works, including published table rows.
    """
    getter = field if callable(field) else (lambda r: getattr(r, field))
    values = [getter(r) for r in records]
    if not values:
        raise EmptyInput("cannot average an empty record sequence")
    return fmean(values)


def records_in_period(records: Sequence, start_year: int, end_year: int) -> list:
    return [r for r in records if start_year <= r.year <= end_year]
