"""Gap analysis of realized growth accounting against plan targets."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .decomposition import ShareTable
from .errors import MissingRealizedValue, NoTargets, PeriodMismatch

TARGET_FIELDS = (
    "va_growth_target",
    "input_contribution_target",
    "tfp_growth_target",
    "tfp_share_target",
    "labor_pp_growth_target",
    "capital_pp_growth_target",
)


class Direction(str, enum.Enum):
    FLOOR = "floor"  # attained when realized >= target
    CEILING = "ceiling"  # attained when realized <= target


# The input-contribution target caps how much growth may come from piling on
# capital and labor; the plan wanted the rest from productivity.
TARGET_DIRECTIONS = {name: Direction.FLOOR for name in TARGET_FIELDS}
TARGET_DIRECTIONS["input_contribution_target"] = Direction.CEILING


class PlanConsistencyWarning(UserWarning):
    pass


@dataclass(frozen=True)
class PlanTargets:
    plan_label: str = ""
    period: tuple[int, int] | None = None
    va_growth_target: float | None = None
    input_contribution_target: float | None = None
    tfp_growth_target: float | None = None
    tfp_share_target: float | None = None
    labor_pp_growth_target: float | None = None
    capital_pp_growth_target: float | None = None

    def present(self) -> dict[str, float]:
        return {
            name: getattr(self, name)
            for name in TARGET_FIELDS
            if getattr(self, name) is not None
        }

    def consistency_issues(self) -> list[str]:
        """Internal-consistency problems; third-party plans may round, so these are advisory."""
        issues = []
        va, inp, tfp = self.va_growth_target, self.input_contribution_target, self.tfp_growth_target
        if None not in (va, inp, tfp) and abs(inp + tfp - va) > 0.1:
            issues.append(
                f"input contribution {inp} + TFP growth {tfp} = {inp + tfp:g}, "
                f"not the value-added target {va}"
            )
        share = self.tfp_share_target
        if None not in (share, tfp, va) and va != 0 and abs(share - 100.0 * tfp / va) > 0.5:
            issues.append(
                f"TFP share target {share} differs from 100*{tfp}/{va} = {100.0 * tfp / va:.2f}"
            )
        return issues


@dataclass(frozen=True)
class RealizedSummary:
    """Realized period means that plan targets are compared against."""

    table: ShareTable
    capital_pp_growth: float | None = None
    labor_pp_growth: float | None = None

    @property
    def period(self) -> tuple[int, int]:
        return self.table.period

    def value_for(self, target: str) -> float | None:
        t = self.table
        if target == "va_growth_target":
            return t.mean("output")
        if target == "input_contribution_target":
            return t.mean("capital_contribution") + t.mean("labor_contribution")
        if target == "tfp_growth_target":
            return t.mean("tfp")
        if target == "tfp_share_target":
            return t.share("tfp")
        if target == "labor_pp_growth_target":
            return self.labor_pp_growth
        if target == "capital_pp_growth_target":
            return self.capital_pp_growth
        raise KeyError(target)


@dataclass(frozen=True)
class GapEntry:
    target: str
    target_value: float
    realized: float
    gap: float  # realized - target
    attained: bool
    direction: Direction


@dataclass(frozen=True)
class GapReport:
    plan_label: str
    period: tuple[int, int]
    entries: tuple[GapEntry, ...]

    @property
    def all_attained(self) -> bool:
        return all(e.attained for e in self.entries)


def evaluate_plan(targets: PlanTargets, realized: RealizedSummary) -> GapReport:
    present = targets.present()
    if not present:
        raise NoTargets(f"plan {targets.plan_label!r} sets no targets")
    if targets.period is not None and tuple(targets.period) != realized.period:
        raise PeriodMismatch(
            f"plan period {targets.period[0]}-{targets.period[1]} but realized summary "
            f"covers {realized.period[0]}-{realized.period[1]}"
        )
    for issue in targets.consistency_issues():
        warnings.warn(issue, PlanConsistencyWarning, stacklevel=2)

    entries = []
    for name in TARGET_FIELDS:
        if name not in present:
            continue
        value = realized.value_for(name)
        if value is None:
            raise MissingRealizedValue(f"no realized value available for {name}")
        gap = value - present[name]
        direction = TARGET_DIRECTIONS[name]
        attained = gap >= 0 if direction is Direction.FLOOR else gap <= 0
        entries.append(GapEntry(name, present[name], value, gap, attained, direction))
    return GapReport(targets.plan_label, realized.period, tuple(entries))
