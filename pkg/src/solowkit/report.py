"""Text, CSV and JSON renderings of analysis results.

Text output is rounded for display. CSV and JSON carry full precision so
they can be fed back into ``check`` or external tools.
"""

from __future__ import annotations

import csv
import io
import json

from .decomposition import SHARE_FIELDS, DiscrepancyReport, ShareTable
from .formats import GROWTH_COLUMNS, PARTIAL_FIELDS, SHARE_TABLE_HEADER
from .pipeline import Analysis
from .plan import GapReport
from .shares import FactorShares, InputOutputRow, labor_income

FORMATS = ("text", "csv", "json")

_LABELS = {
    "output": "Output value-added",
    "capital_contribution": "Capital contribution",
    "labor_contribution": "Labor contribution",
    "tfp": "Total factor productivity",
    "capital_pp_growth": "Capital partial productivity",
    "labor_pp_growth": "Labor partial productivity",
}


def fmt(value: float | None, rounding: int) -> str:
    if value is None:
        return ""
    text = f"{value:.{rounding}f}"
    if float(text) == 0:
        text = f"{0.0:.{rounding}f}"
    return text


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) if i else h.ljust(w) for i, (h, w) in enumerate(zip(header, widths)))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(row, widths))))
    return "\n".join(lines)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(payload) -> str:
    return json.dumps(payload, indent=2)


def _shares_json(shares: FactorShares) -> dict:
    return {"alpha": shares.alpha, "beta": shares.beta}


def render_compute(analysis: Analysis, output_format: str = "text", rounding: int = 2) -> str:
    rows = []
    for rec, dec in zip(analysis.records, analysis.rows):
        rows.append(
            {
                "year": rec.year,
                "q_hat": rec.q_hat,
                "k_hat": rec.k_hat,
                "l_hat": rec.l_hat,
                "apk_hat": rec.apk_hat,
                "apl_hat": rec.apl_hat,
                "tfp_hat": dec.tfp_hat,
            }
        )
    means = {col: analysis.mean(col) for col in GROWTH_COLUMNS}
    if output_format == "json":
        return _json(
            {
                "command": "compute",
                "convention": analysis.convention.value,
                "shares": _shares_json(analysis.shares),
                "period": list(analysis.period),
                "rows": rows,
                "means": means,
            }
        )
    if output_format == "csv":
        body = [[r["year"]] + [repr(r[c]) for c in GROWTH_COLUMNS] for r in rows]
        body.append(["mean"] + [repr(means[c]) for c in GROWTH_COLUMNS])
        return _csv(("year",) + GROWTH_COLUMNS, body)
    cols = ("apk_hat", "apl_hat", "tfp_hat")
    body = [[str(r["year"])] + [fmt(r[c], rounding) for c in cols] for r in rows]
    body.append(["mean"] + [fmt(means[c], rounding) for c in cols])
    start, end = analysis.period
    title = (
        f"Capital, labor and total factor productivity growth (%), {start}-{end}\n"
        f"alpha={analysis.shares.alpha:g} beta={analysis.shares.beta:g} "
        f"convention={analysis.convention.value}"
    )
    header = ["Year", "Capital productivity", "Labor productivity", "TFP"]
    return title + "\n\n" + _table(header, body)


def render_decompose(
    analysis: Analysis, table: ShareTable, output_format: str = "text", rounding: int = 2
) -> str:
    partials = {
        "capital_pp_growth": analysis.mean("apk_hat"),
        "labor_pp_growth": analysis.mean("apl_hat"),
    }
    if output_format == "json":
        return _json(
            {
                "command": "decompose",
                "convention": analysis.convention.value,
                "shares": _shares_json(analysis.shares),
                "period": list(table.period),
                "rows": {
                    name: {"mean_rate": row.mean_rate, "share": row.share}
                    for name, row in table.rows.items()
                },
                "partial_productivity": partials,
            }
        )
    if output_format == "csv":
        body = [[name, repr(table.mean(name)), repr(table.share(name))] for name in SHARE_FIELDS]
        body += [[name, repr(partials[name]), ""] for name in PARTIAL_FIELDS]
        return _csv(SHARE_TABLE_HEADER, body)
    body = [[_LABELS[n], fmt(table.mean(n), rounding), fmt(table.share(n), rounding)] for n in SHARE_FIELDS]
    body += [[_LABELS[n], fmt(partials[n], rounding), ""] for n in PARTIAL_FIELDS]
    start, end = table.period
    title = (
        f"Input and productivity shares in value-added growth, {start}-{end}\n"
        f"alpha={analysis.shares.alpha:g} beta={analysis.shares.beta:g} "
        f"convention={analysis.convention.value}"
    )
    return title + "\n\n" + _table(["", "Average growth rate (%)", "Share (%)"], body)


def render_shares(
    row: InputOutputRow,
    family_labor_fraction: float,
    shares: FactorShares,
    output_format: str = "text",
    rounding: int = 2,
) -> str:
    adjusted_mixed = family_labor_fraction * row.mixed_income
    labor = labor_income(row, family_labor_fraction)
    trace = {
        "compensation_of_employees": row.compensation_of_employees,
        "mixed_income": row.mixed_income,
        "family_labor_fraction": family_labor_fraction,
        "adjusted_mixed_income": adjusted_mixed,
        "labor_income": labor,
        "value_added": row.value_added,
    }
    if output_format == "json":
        return _json({"command": "shares", **_shares_json(shares), "trace": trace})
    if output_format == "csv":
        return _csv(("alpha", "beta") + tuple(trace), [[repr(shares.alpha), repr(shares.beta)] + [repr(v) for v in trace.values()]])
    return "\n".join(
        [
            f"alpha (capital) = {fmt(shares.alpha, rounding)}",
            f"beta  (labor)   = {fmt(shares.beta, rounding)}",
            "",
            f"beta = (compensation {row.compensation_of_employees:g}"
            f" + {family_labor_fraction:g} x mixed income {row.mixed_income:g} = {adjusted_mixed:g})"
            f" / value-added {row.value_added:g}",
            f"     = {labor:g} / {row.value_added:g}",
            "alpha = 1 - beta",
        ]
    )


def render_plan(report: GapReport, output_format: str = "text", rounding: int = 2) -> str:
    entries = [
        {
            "target": e.target,
            "target_value": e.target_value,
            "realized": e.realized,
            "gap": e.gap,
            "attained": e.attained,
            "direction": e.direction.value,
        }
        for e in report.entries
    ]
    if output_format == "json":
        return _json(
            {
                "command": "plan-eval",
                "plan_label": report.plan_label,
                "period": list(report.period),
                "entries": entries,
                "all_attained": report.all_attained,
            }
        )
    header = ("target", "target_value", "realized", "gap", "attained", "direction")
    if output_format == "csv":
        return _csv(
            header,
            [
                [e["target"], repr(e["target_value"]), repr(e["realized"]), repr(e["gap"]),
                 str(e["attained"]).lower(), e["direction"]]
                for e in entries
            ],
        )
    body = [
        [
            e["target"],
            fmt(e["target_value"], rounding),
            fmt(e["realized"], rounding),
            fmt(e["gap"], rounding),
            "attained" if e["attained"] else "not attained",
            e["direction"],
        ]
        for e in entries
    ]
    start, end = report.period
    label = report.plan_label or "plan"
    title = f"{label}: targets vs realized, {start}-{end}"
    return title + "\n\n" + _table(["Target", "Target", "Realized", "Gap", "Status", "Kind"], body)


def render_check(report: DiscrepancyReport, output_format: str = "text", rounding: int = 2) -> str:
    entries = [
        {"label": d.label, "published": d.published, "recomputed": d.recomputed, "difference": d.difference}
        for d in report.entries
    ]
    if output_format == "json":
        return _json(
            {
                "command": "check",
                "tolerance": report.tolerance,
                "compared": report.compared,
                "clean": report.clean,
                "discrepancies": entries,
            }
        )
    if output_format == "csv":
        return _csv(
            ("label", "published", "recomputed", "difference"),
            [[e["label"], repr(e["published"]), repr(e["recomputed"]), repr(e["difference"])] for e in entries],
        )
    if report.clean:
        return f"clean: {report.compared} values agree within {report.tolerance:g}"
    body = [
        [e["label"], fmt(e["published"], rounding), fmt(e["recomputed"], rounding), fmt(e["difference"], rounding)]
        for e in entries
    ]
    title = (
        f"{len(entries)} of {report.compared} values differ by more than {report.tolerance:g}"
    )
    return title + "\n\n" + _table(["Field", "Published", "Recomputed", "Difference"], body)
