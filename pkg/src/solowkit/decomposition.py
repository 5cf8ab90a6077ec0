"""Solow residual, value-added growth decomposition and share tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from statistics import fmean
from typing import Mapping, Sequence

from .errors import EmptyInput, FieldMismatch, ZeroGrowthDenominator
from .growth import GrowthRecord
from .shares import FactorShares

SHARE_FIELDS = ("output", "capital_contribution", "labor_contribution", "tfp")
DEFAULT_TOLERANCE = 0.1
DEFAULT_EPSILON = 1e-9


def tfp_growth(q_hat: float, k_hat: float, l_hat: float, shares: FactorShares) -> float:
    """Output growth left over after share-weighted input growth."""
    return q_hat - shares.alpha * k_hat - shares.beta * l_hat


def tfp_from_partials(apk_hat: float, apl_hat: float, shares: FactorShares) -> float:
    """TFP growth as the share-weighted sum of partial-productivity growth.

    Equal to :func:`tfp_growth` whenever ``apk_hat = q_hat - k_hat`` and
    ``apl_hat = q_hat - l_hat``, because the shares sum to one.
    """
    return shares.alpha * apk_hat + shares.beta * apl_hat


@dataclass(frozen=True)
class DecompositionRow:
    year: int
    q_hat: float
    contrib_capital: float
    contrib_labor: float
    tfp_hat: float
    tfp_via_partials: float


def decompose(records: Sequence[GrowthRecord], shares: FactorShares) -> list[DecompositionRow]:
    if not records:
        raise EmptyInput("no growth records to decompose")
    return [
        DecompositionRow(
            year=r.year,
            q_hat=r.q_hat,
            contrib_capital=shares.alpha * r.k_hat,
            contrib_labor=shares.beta * r.l_hat,
            tfp_hat=tfp_growth(r.q_hat, r.k_hat, r.l_hat, shares),
            tfp_via_partials=tfp_from_partials(r.apk_hat, r.apl_hat, shares),
        )
        for r in records
    ]


@dataclass(frozen=True)
class ShareRow:
    mean_rate: float
    share: float | None  # percent of mean output growth; None when not published


@dataclass(frozen=True)
class ShareTable:
    """Mean growth rates and their share of mean value-added growth.

    Rows are keyed by :data:`SHARE_FIELDS`. Capital and labor rows hold
    contributions (``alpha * k_hat``, ``beta * l_hat``), not raw input
    growth. Tables built by :func:`share_table` are normalized so output is
    100; published tables are stored as given.
    """

    period: tuple[int, int]
    rows: Mapping[str, ShareRow] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "period", (int(self.period[0]), int(self.period[1])))
        object.__setattr__(self, "rows", dict(self.rows))

    def mean(self, name: str) -> float:
        return self.rows[name].mean_rate

    def share(self, name: str) -> float | None:
        return self.rows[name].share

    @classmethod
    def from_means(
        cls,
        period: tuple[int, int],
        means: Mapping[str, float],
        epsilon: float = DEFAULT_EPSILON,
    ) -> "ShareTable":
        missing = set(SHARE_FIELDS) - set(means)
        if missing:
            raise FieldMismatch(f"missing mean rates for {sorted(missing)}")
        output = means["output"]
        if not math.isfinite(output) or abs(output) < epsilon:
            raise ZeroGrowthDenominator(
                f"mean value-added growth {output!r} is within {epsilon} of zero"
            )
        rows = {name: ShareRow(means[name], 100.0 * means[name] / output) for name in SHARE_FIELDS}
        # output / output can land one ulp off 100
        rows["output"] = ShareRow(output, 100.0)
        return cls(period, rows)


def share_table(
    rows: Sequence[DecompositionRow],
    period: tuple[int, int],
    epsilon: float = DEFAULT_EPSILON,
) -> ShareTable:
    """Average decomposition rows over ``period`` and normalize to output = 100."""
    start, end = period
    kept = [r for r in rows if start <= r.year <= end]
    if not kept:
        raise EmptyInput(f"no decomposition rows within {start}-{end}")
    means = {
        "output": fmean(r.q_hat for r in kept),
        "capital_contribution": fmean(r.contrib_capital for r in kept),
        "labor_contribution": fmean(r.contrib_labor for r in kept),
        "tfp": fmean(r.tfp_hat for r in kept),
    }
    return ShareTable.from_means((start, end), means, epsilon)


@dataclass(frozen=True)
class Discrepancy:
    label: str
    published: float
    recomputed: float
    difference: float


@dataclass(frozen=True)
class DiscrepancyReport:
    entries: tuple[Discrepancy, ...]
    tolerance: float
    compared: int = 0

    @property
    def clean(self) -> bool:
        return not self.entries


def compare_values(
    published: Mapping[str, float | None],
    recomputed: Mapping[str, float | None],
    tolerance: float = DEFAULT_TOLERANCE,
) -> DiscrepancyReport:
    """Flag every label whose absolute difference exceeds ``tolerance``.

    Labels must match exactly. A ``None`` on either side means the value is
    not available and the label is skipped.
    """
    if set(published) != set(recomputed):
        only_pub = sorted(set(published) - set(recomputed))
        only_re = sorted(set(recomputed) - set(published))
        raise FieldMismatch(f"field sets differ: published-only {only_pub}, recomputed-only {only_re}")
    entries = []
    compared = 0
    for label in published:
        pub, rec = published[label], recomputed[label]
        if pub is None or rec is None:
            continue
        compared += 1
        diff = abs(pub - rec)
        if not diff <= tolerance:
            entries.append(Discrepancy(label, pub, rec, diff))
    return DiscrepancyReport(tuple(entries), tolerance, compared)


def flatten_share_table(table: ShareTable) -> dict[str, float | None]:
    flat: dict[str, float | None] = {}
    for name, row in table.rows.items():
        flat[f"{name}.mean_rate"] = row.mean_rate
        flat[f"{name}.share"] = row.share
    return flat


def consistency_check(
    published: ShareTable,
    recomputed: ShareTable,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DiscrepancyReport:
    """Compare a published share table against a recomputed one."""
    if published.period != recomputed.period:
        raise FieldMismatch(f"periods differ: {published.period} vs {recomputed.period}")
    return compare_values(flatten_share_table(published), flatten_share_table(recomputed), tolerance)


def recompute_from_means(published: ShareTable, epsilon: float = DEFAULT_EPSILON) -> ShareTable:
    """Shares implied by a table's own mean-rate column."""
    means = {name: row.mean_rate for name, row in published.rows.items()}
    return ShareTable.from_means(published.period, means, epsilon)
