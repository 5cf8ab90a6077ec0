"""End-to-end analysis of one series, and checks of published tables against it."""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean
from .decomposition import (
    DEFAULT_EPSILON,
    DEFAULT_TOLERANCE,
    DecompositionRow,
    DiscrepancyReport,
    ShareTable,
    compare_values,
    consistency_check,
    decompose,
    recompute_from_means,
    share_table,
    tfp_from_partials,
    tfp_growth,
)
from .errors import EmptyInput, FieldMismatch, GrowthAccountingError
from .formats import PublishedGrowthTable, PublishedShareTable
from .growth import DEFAULT_CONVENTION, GrowthConvention, GrowthRecord, growth_records, mean_growth
from .plan import RealizedSummary
from .series import SectorSeries, slice_period
from .shares import FactorShares


@dataclass(frozen=True)
class Analysis:
    shares: FactorShares
    convention: GrowthConvention
    period: tuple[int, int]
    records: tuple[GrowthRecord, ...]
    rows: tuple[DecompositionRow, ...]

    def mean(self, column: str) -> float:
        """Period mean of a growth column (``q_hat`` .. ``apl_hat``) or ``tfp_hat``."""
        if column == "tfp_hat":
            return mean_growth(self.rows, "tfp_hat")
        return mean_growth(self.records, column)

    def share_table(self, epsilon: float = DEFAULT_EPSILON) -> ShareTable:
        return share_table(self.rows, self.period, epsilon)

    def summary(self, epsilon: float = DEFAULT_EPSILON) -> RealizedSummary:
        return RealizedSummary(
            self.share_table(epsilon),
            capital_pp_growth=self.mean("apk_hat"),
            labor_pp_growth=self.mean("apl_hat"),
        )


def default_period(series: SectorSeries) -> tuple[int, int]:
    return series.first_year, series.last_year


def analyze(
    series: SectorSeries,
    shares: FactorShares,
    convention: GrowthConvention | str = DEFAULT_CONVENTION,
    period: tuple[int, int] | None = None,
) -> Analysis:
    """Growth records and decomposition rows for the years in ``period``.

    ``period`` names growth years. The level at ``start - 1`` is used as the
    base when the series has it; a period starting at the first observed
    year therefore yields growth rows from the following year on, so
    ``1991:2010`` over 1991-2010 levels gives 19 rows.
    """
    convention = GrowthConvention(convention)
    start, end = period if period is not None else default_period(series)
    if start - 1 >= series.first_year:
        window = slice_period(series, start - 1, end)
    else:
        window = slice_period(series, start, end)
    records = tuple(growth_records(window, convention))
    rows = tuple(decompose(records, shares))
    return Analysis(shares, convention, (start, end), records, rows)


def check_share_table(
    published: PublishedShareTable,
    analysis: Analysis | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DiscrepancyReport:
    """Check a published share table.

    Without an analysis, shares are recomputed from the table's own mean-rate
    column. With one, every mean and share is recomputed from the series.
    """
    table = published.table
    if analysis is None:
        return consistency_check(table, recompute_from_means(table), tolerance)
    table = ShareTable(analysis.period, table.rows)
    recomputed = analysis.share_table()
    report = consistency_check(table, recomputed, tolerance)
    if not published.partials:
        return report
    realized = {
        "capital_pp_growth.mean_rate": analysis.mean("apk_hat"),
        "labor_pp_growth.mean_rate": analysis.mean("apl_hat"),
    }
    partial_pub = {f"{k}.mean_rate": v for k, v in published.partials.items()}
    extra = compare_values(partial_pub, {k: realized[k] for k in partial_pub}, tolerance)
    return DiscrepancyReport(
        report.entries + extra.entries, tolerance, report.compared + extra.compared
    )


def _self_recompute(year_values: dict[str, float], shares: FactorShares | None) -> dict[str, float | None]:
    out: dict[str, float | None] = {c: None for c in year_values}
    have = year_values.keys()
    if {"q_hat", "k_hat"} <= have and "apk_hat" in have:
        out["apk_hat"] = year_values["q_hat"] - year_values["k_hat"]
    if {"q_hat", "l_hat"} <= have and "apl_hat" in have:
        out["apl_hat"] = year_values["q_hat"] - year_values["l_hat"]
    if "tfp_hat" in have and shares is not None:
        if {"q_hat", "k_hat", "l_hat"} <= have:
            out["tfp_hat"] = tfp_growth(year_values["q_hat"], year_values["k_hat"], year_values["l_hat"], shares)
        elif {"apk_hat", "apl_hat"} <= have:
            out["tfp_hat"] = tfp_from_partials(year_values["apk_hat"], year_values["apl_hat"], shares)
    return out


def check_growth_table(
    published: PublishedGrowthTable,
    analysis: Analysis | None = None,
    shares: FactorShares | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DiscrepancyReport:
    """Check a published per-year growth table.

    With an analysis, every published cell is compared with the value
    recomputed from the series. Without one, the table is checked against
    itself: partial-productivity and TFP columns are rebuilt from the other
    columns (TFP needs ``shares``) and the mean row from the year rows.
    """
    pub_flat: dict[str, float | None] = {}
    rec_flat: dict[str, float | None] = {}
    if analysis is not None:
        by_year = {r.year: r for r in analysis.records}
        rows_by_year = {r.year: r for r in analysis.rows}
        missing = sorted(set(published.rows) - set(by_year))
        if missing:
            raise FieldMismatch(f"published years {missing} not in the recomputed period")
        for year, values in published.rows.items():
            for col, value in values.items():
                pub_flat[f"{year}.{col}"] = value
                source = rows_by_year[year] if col == "tfp_hat" else by_year[year]
                rec_flat[f"{year}.{col}"] = getattr(source, col)
        if published.means is not None:
            kept = sorted(published.rows)
            for col, value in published.means.items():
                pub_flat[f"mean.{col}"] = value
                src = [rows_by_year[y] if col == "tfp_hat" else by_year[y] for y in kept]
                rec_flat[f"mean.{col}"] = mean_growth(src, col)
    else:
        for year, values in published.rows.items():
            for col, value in _self_recompute(values, shares).items():
                pub_flat[f"{year}.{col}"] = values[col]
                rec_flat[f"{year}.{col}"] = value
        if published.means is not None:
            for col, value in published.means.items():
                pub_flat[f"mean.{col}"] = value
                rec_flat[f"mean.{col}"] = fmean(v[col] for v in published.rows.values())
    report = compare_values(pub_flat, rec_flat, tolerance)
    if report.compared == 0:
        raise EmptyInput("nothing in the published table could be recomputed; pass --alpha or --input")
    return report


def check_published(
    published: PublishedShareTable | PublishedGrowthTable,
    analysis: Analysis | None = None,
    shares: FactorShares | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DiscrepancyReport:
    if tolerance < 0:
        raise GrowthAccountingError(f"tolerance must be non-negative, got {tolerance!r}")
    if isinstance(published, PublishedShareTable):
        return check_share_table(published, analysis, tolerance)
    return check_growth_table(published, analysis, shares, tolerance)


def published_summary(
    published: PublishedShareTable, period: tuple[int, int]
) -> RealizedSummary:
    """Treat a published share table as the realized outcome for a period."""
    return RealizedSummary(
        ShareTable(period, published.table.rows),
        capital_pp_growth=published.partials.get("capital_pp_growth"),
        labor_pp_growth=published.partials.get("labor_pp_growth"),
    )

