"""Annual sector time series: validation and period slicing."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptyPeriod,
    NonContiguousYears,
    NonPositiveLevel,
    PeriodOutOfRange,
    TooShort,
)

LEVEL_FIELDS = ("value_added", "capital_stock", "employment")


@dataclass(frozen=True)
class AnnualObservation:
    """One year of sector data.

    ``value_added`` and ``capital_stock`` are constant-price money values,
    ``employment`` is a head count. Positivity is checked by
    :func:`validate_series`, not here, so raw rows can be held and reported on.
    """

    year: int
    value_added: float
    capital_stock: float
    employment: float


@dataclass(frozen=True)
class SectorSeries:
    observations: tuple[AnnualObservation, ...]
    sector_label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "observations", tuple(self.observations))
        _check(self.observations)

    def __len__(self) -> int:
        return len(self.observations)

    def __iter__(self):
        return iter(self.observations)

    @property
    def years(self) -> list[int]:
        return [obs.year for obs in self.observations]

    @property
    def first_year(self) -> int:
        return self.observations[0].year

    @property
    def last_year(self) -> int:
        return self.observations[-1].year


def _coerce(item) -> AnnualObservation:
    if isinstance(item, AnnualObservation):
        return item
    year, va, cap, emp = item
    return AnnualObservation(int(year), float(va), float(cap), float(emp))


def _check(observations: Sequence[AnnualObservation]) -> None:
    if len(observations) < 2:
        raise TooShort(len(observations))
    for obs in observations:
        for name in LEVEL_FIELDS:
            value = getattr(obs, name)
            if not (math.isfinite(value) and value > 0):
                raise NonPositiveLevel(obs.year, name, value)
    for prev, cur in zip(observations, observations[1:]):
        if cur.year == prev.year:
            raise NonContiguousYears(cur.year, "duplicate")
        if cur.year != prev.year + 1:
            raise NonContiguousYears(prev.year + 1, "missing")


def validate_series(
    raw: Iterable[AnnualObservation | Sequence[float]], sector_label: str = ""
) -> SectorSeries:
    """Build a :class:`SectorSeries` from rows in any order.

    Rows may be :class:`AnnualObservation` instances or
    ``(year, value_added, capital_stock, employment)`` tuples. Years are
    sorted; gaps and duplicates are rejected rather than interpolated.
    """
    if isinstance(raw, SectorSeries):
        sector_label = sector_label or raw.sector_label
        raw = raw.observations
    observations = sorted((_coerce(r) for r in raw), key=lambda o: o.year)
    return SectorSeries(tuple(observations), sector_label)


def slice_period(series: SectorSeries, start_year: int, end_year: int) -> SectorSeries:
    """Return the observations for ``start_year..end_year`` inclusive.

    Growth over ``[s, e]`` needs the level at ``s - 1``; callers that want
    growth rates for year ``s`` pass ``s - 1`` as the start.
    """
    if start_year > end_year:
        raise EmptyPeriod(f"period start {start_year} is after end {end_year}")
    if start_year < series.first_year or end_year > series.last_year:
        raise PeriodOutOfRange(
            f"period {start_year}-{end_year} outside series coverage "
            f"{series.first_year}-{series.last_year}"
        )
    kept = tuple(o for o in series.observations if start_year <= o.year <= end_year)
    return SectorSeries(kept, series.sector_label)
