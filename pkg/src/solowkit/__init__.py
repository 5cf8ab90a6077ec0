"""Growth accounting: Solow residual TFP growth, value-added decomposition,
factor shares from input-output data, and checks of published tables and
plan targets."""

from .decomposition import (
    DecompositionRow,
    DiscrepancyReport,
    ShareTable,
    compare_values,
    consistency_check,
    decompose,
    share_table,
    tfp_from_partials,
    tfp_growth,
)
from .growth import (
    GrowthConvention,
    GrowthRecord,
    growth_rate,
    growth_records,
    mean_growth,
    partial_productivity_levels,
)
from .plan import GapReport, PlanTargets, RealizedSummary, evaluate_plan
from .series import AnnualObservation, SectorSeries, slice_period, validate_series
from .shares import FactorShares, InputOutputRow, estimate_shares, fixed_shares

__version__ = "0.1.0"

__all__ = [
    "AnnualObservation",
    "DecompositionRow",
    "DiscrepancyReport",
    "FactorShares",
    "GapReport",
    "GrowthConvention",
    "GrowthRecord",
    "InputOutputRow",
    "PlanTargets",
    "RealizedSummary",
    "SectorSeries",
    "ShareTable",
    "compare_values",
    "consistency_check",
    "decompose",
    "estimate_shares",
    "evaluate_plan",
    "fixed_shares",
    "growth_rate",
    "growth_records",
    "mean_growth",
    "partial_productivity_levels",
    "share_table",
    "slice_period",
    "tfp_from_partials",
    "tfp_growth",
    "validate_series",
]
