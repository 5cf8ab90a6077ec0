"""Write a level series that reproduces the published agricultural growth tables.

The raw levels were never published. This series is built backwards from
the per-year capital-productivity and TFP growth columns (discrete percent
growth, alpha = 0.62) with value-added growth held at a constant rate inside
each sub-period so that the 1991-2010 and 2006-2010 output means match the
published 3.67 and 3.76. Labor growth is then whatever closes the residual.
For 2007-2010 the published labor-productivity column is not consistent
with the other two, so this series reproduces the TFP column there and
its labor-productivity growth differs from the published one.
"""

from __future__ import annotations

import csv
import sys
from pathlib import Path

ALPHA = 0.62
BASE = (1991, 10_000.0, 40_000.0, 3_200_000.0)
LATE = range(2006, 2011)
Q_LATE = 3.76
Q_EARLY = (3.67 * 19 - Q_LATE * len(LATE)) / (19 - len(LATE))


def load_table1(path: Path) -> list[dict[str, float]]:
    with open(path, newline="") as fh:
        return [{k: float(v) for k, v in row.items()} for row in csv.DictReader(fh)]


def build(rows: list[dict[str, float]]) -> list[tuple[int, float, float, float]]:
    beta = 1.0 - ALPHA
    year, va, cap, emp = BASE
    out = [(year, va, cap, emp)]
    for row in rows:
        year = int(row["year"])
        q = Q_LATE if year in LATE else Q_EARLY
        k = q - row["apk_hat"]
        l = (q - ALPHA * k - row["tfp_hat"]) / beta
        va *= 1 + q / 100
        cap *= 1 + k / 100
        emp *= 1 + l / 100
        out.append((year, va, cap, emp))
    return out


def main(argv: list[str]) -> None:
    root = Path(__file__).resolve().parents[1]
    src = root / "data" / "table1_growth.csv"
    dst = Path(argv[1]) if len(argv) > 1 else root / "data" / "reference_series.csv"
    with open(dst, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["year", "value_added", "capital", "employment"])
        for year, va, cap, emp in build(load_table1(src)):
            writer.writerow([year, repr(va), repr(cap), repr(emp)])
    print(f"wrote {dst}")


if __name__ == "__main__":
    main(sys.argv)
