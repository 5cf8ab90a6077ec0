"""Command-line interface.

Exit status: 0 success or clean check, 1 usage error, 2 data or validation
error, 3 check found discrepancies.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .decomposition import DEFAULT_TOLERANCE, DiscrepancyReport
from .errors import GrowthAccountingError
from .formats import PublishedShareTable, parse_period, read_io_row, read_published, read_series, read_targets
from .growth import DEFAULT_CONVENTION, GrowthConvention
from .pipeline import analyze, check_published, published_summary
from .plan import evaluate_plan
from .report import FORMATS, render_check, render_compute, render_decompose, render_plan, render_shares
from .shares import DEFAULT_FAMILY_LABOR_FRACTION, FactorShares, estimate_shares, fixed_shares

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DISCREPANT = 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    input_path: Path | None = None
    convention: GrowthConvention = DEFAULT_CONVENTION
    alpha: float | None = None
    io_table: Path | None = None
    family_labor_fraction: float = DEFAULT_FAMILY_LABOR_FRACTION
    period: tuple[int, int] | None = None
    output_format: str = "text"
    rounding: int = 2

    def __post_init__(self) -> None:
        if self.alpha is not None and self.io_table is not None:
            raise UsageError("give either --alpha or --io-table, not both")
        if not 0 <= self.rounding <= 10:
            raise UsageError(f"--rounding must be between 0 and 10, got {self.rounding}")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")

    @property
    def has_shares(self) -> bool:
        return self.alpha is not None or self.io_table is not None

    def shares(self) -> FactorShares:
        if self.alpha is not None:
            return fixed_shares(self.alpha)
        if self.io_table is not None:
            return estimate_shares(read_io_row(self.io_table), self.family_labor_fraction)
        raise UsageError("factor shares required: give --alpha or --io-table")

    def require_input(self) -> Path:
        if self.input_path is None:
            raise UsageError("--input is required")
        return self.input_path


def cmd_compute(config: RunConfig) -> str:
    series = read_series(config.require_input())
    analysis = analyze(series, config.shares(), config.convention, config.period)
    return render_compute(analysis, config.output_format, config.rounding)


def cmd_decompose(config: RunConfig) -> str:
    series = read_series(config.require_input())
    analysis = analyze(series, config.shares(), config.convention, config.period)
    return render_decompose(analysis, analysis.share_table(), config.output_format, config.rounding)


def cmd_shares(
    io_row_path: Path,
    family_labor_fraction: float = DEFAULT_FAMILY_LABOR_FRACTION,
    output_format: str = "text",
    rounding: int = 2,
) -> str:
    row = read_io_row(io_row_path)
    shares = estimate_shares(row, family_labor_fraction)
    return render_shares(row, family_labor_fraction, shares, output_format, rounding)


def cmd_plan_eval(config: RunConfig, targets_path: Path, published_path: Path | None = None) -> str:
    """Realized values come from ``--input`` or, failing that, a published share table."""
    targets = read_targets(targets_path)
    period = config.period or targets.period
    if config.input_path is not None:
        series = read_series(config.input_path)
        analysis = analyze(series, config.shares(), config.convention, period)
        realized = analysis.summary()
    elif published_path is not None:
        if period is None:
            raise UsageError("--period is required when the plan file has no period")
        published = read_published(published_path, period)
        if not isinstance(published, PublishedShareTable):
            raise UsageError("plan-eval needs a share table (field,mean_rate,share) as --published")
        realized = published_summary(published, period)
    else:
        raise UsageError("plan-eval needs --input or --published")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = evaluate_plan(targets, realized)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return render_plan(report, config.output_format, config.rounding)


def cmd_check(
    published_path: Path, config: RunConfig, tolerance: float = DEFAULT_TOLERANCE
) -> tuple[str, DiscrepancyReport]:
    analysis = None
    shares = config.shares() if config.has_shares else None
    period = config.period
    if config.input_path is not None:
        series = read_series(config.input_path)
        if shares is None:
            raise UsageError("checking against --input needs --alpha or --io-table")
        analysis = analyze(series, shares, config.convention, period)
        period = analysis.period
    published = read_published(published_path, period or (0, 0))
    report = check_published(published, analysis, shares, tolerance)
    return render_check(report, config.output_format, config.rounding), report


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _period(text: str) -> tuple[int, int]:
    try:
        return parse_period(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", type=Path, help="series CSV: year,value_added,capital,employment")
    src = common.add_mutually_exclusive_group()
    src.add_argument("--alpha", type=float, help="fixed capital share; labor gets 1 - alpha")
    src.add_argument("--io-table", type=Path, help="input-output row CSV to estimate shares from")
    common.add_argument(
        "--family-labor-fraction", type=float, default=DEFAULT_FAMILY_LABOR_FRACTION,
        help="part of mixed income counted as labor (default %(default)s)",
    )
    common.add_argument("--period", type=_period, help="growth years START:END")
    common.add_argument(
        "--convention", choices=[c.value for c in GrowthConvention], default=DEFAULT_CONVENTION.value,
    )
    common.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    common.add_argument("--rounding", type=int, default=2, help="decimal places in text output")

    parser = _Parser(prog="solowkit", description="Growth accounting and Solow residual toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("compute", parents=[common], help="per-year partial productivity and TFP growth")
    sub.add_parser("decompose", parents=[common], help="shares of input and TFP growth in value-added growth")

    p = sub.add_parser("shares", help="estimate factor shares from an input-output row")
    p.add_argument("--io-table", type=Path, required=True)
    p.add_argument("--family-labor-fraction", type=float, default=DEFAULT_FAMILY_LABOR_FRACTION)
    p.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
    p.add_argument("--rounding", type=int, default=2)

    p = sub.add_parser("plan-eval", parents=[common], help="gap report against plan targets")
    p.add_argument("--targets", type=Path, required=True, help="key = value plan targets file")
    p.add_argument("--published", type=Path, help="published share table to use as realized values")

    p = sub.add_parser("check", parents=[common], help="check a published table for consistency")
    p.add_argument("--published", type=Path, required=True)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="percentage points")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        input_path=args.input,
        convention=GrowthConvention(args.convention),
        alpha=args.alpha,
        io_table=args.io_table,
        family_labor_fraction=args.family_labor_fraction,
        period=args.period,
        output_format=args.output_format,
        rounding=args.rounding,
    )


def run(args: argparse.Namespace) -> tuple[str, int]:
    if args.command == "shares":
        if not 0 <= args.rounding <= 10:
            raise UsageError(f"--rounding must be between 0 and 10, got {args.rounding}")
        return cmd_shares(args.io_table, args.family_labor_fraction, args.output_format, args.rounding), EXIT_OK
    config = _config(args)
    if args.command == "compute":
        return cmd_compute(config), EXIT_OK
    if args.command == "decompose":
        return cmd_decompose(config), EXIT_OK
    if args.command == "plan-eval":
        return cmd_plan_eval(config, args.targets, args.published), EXIT_OK
    if args.command == "check":
        text, report = cmd_check(args.published, config, args.tolerance)
        return text, EXIT_OK if report.clean else EXIT_DISCREPANT
    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = run(args)
    except UsageError as exc:
        print(f"solowkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GrowthAccountingError as exc:
        print(f"solowkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
