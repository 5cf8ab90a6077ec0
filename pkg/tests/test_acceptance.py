"""Acceptance criteria, one test each.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import csv
import io
import math
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import cobb_douglas_series
from solowkit.cli import EXIT_DISCREPANT, main
from solowkit.decomposition import DecompositionRow, ShareRow, ShareTable, decompose, share_table, tfp_from_partials, tfp_growth
from solowkit.formats import read_published
from solowkit.growth import GrowthRecord, growth_records, mean_growth, records_in_period
from solowkit.plan import PlanTargets, RealizedSummary, evaluate_plan
from solowkit.series import validate_series
from solowkit.shares import InputOutputRow, estimate_shares, fixed_shares

S62 = fixed_shares(0.62)


def _record(criterion, name, check):
    try:
        detail = check() or ""
    except AssertionError as exc:
        criterion(name, False, str(exc).splitlines()[0] if str(exc) else "assertion failed")
        raise
    criterion(name, True, detail)


@pytest.fixture
def table1(data_dir):
    return read_published(data_dir / "table1_growth.csv")


class Row:
    def __init__(self, year, values):
        self.year = year
        self.__dict__.update(values)


def test_c1_table1_reconstruction(criterion, table1):
    def check():
        misses = []
        for year, v in sorted(table1.rows.items()):
            rebuilt = tfp_from_partials(v["apk_hat"], v["apl_hat"], S62)
            if abs(rebuilt - v["tfp_hat"]) > 0.05:
                misses.append(f"{year}: {rebuilt:.4f} vs {v['tfp_hat']}")
        assert not misses, f"{len(misses)}/19 rows off by > 0.05: " + "; ".join(misses)
        return "19/19 rows within 0.05"

    _record(criterion, "1 Table 1 TFP column from partials, +-0.05", check)


def test_c2_period_averages(criterion, table1):
    def check():
        rows = [Row(y, v) for y, v in sorted(table1.rows.items())]
        late = records_in_period(rows, 2006, 2010)
        assert len(rows) == 19 and len(late) == 5
        expected = [
            (rows, "apk_hat", -2.89), (rows, "apl_hat", 2.76), (rows, "tfp_hat", -0.72),
            (late, "apk_hat", -2.95), (late, "apl_hat", 2.72), (late, "tfp_hat", -0.78),
        ]
        for recs, col, target in expected:
            got = mean_growth(recs, col)
            assert abs(got - target) <= 0.01, f"mean {col} over {recs[0].year}-{recs[-1].year}: {got} vs {target}"
        return "6/6 means within 0.01"

    _record(criterion, "2 period averages of Table 1, +-0.01", check)


def test_c3_table2_shares(criterion):
    def check():
        row = DecompositionRow(2000, 3.67, 0.35, 4.04, -0.72, -0.72)
        table = share_table([row], (1991, 2010))
        expected = {"output": 100.0, "capital_contribution": 9.54, "labor_contribution": 110.1, "tfp": -19.62}
        for name, target in expected.items():
            assert abs(table.share(name) - target) <= 0.05, f"{name}: {table.share(name)} vs {target}"
        parts = table.share("capital_contribution") + table.share("labor_contribution") + table.share("tfp")
        assert abs(parts - 100.0) <= 0.05, f"component shares sum to {parts}"
        return f"tfp share {table.share('tfp'):.4f}, components sum {parts:.6f}"

    _record(criterion, "3 Table 2 shares from mean rates, +-0.05", check)


def test_c4_table3_discrepancies(criterion, data_dir, capsys):
    def check():
        code = main(["check", "--published", str(data_dir / "table3_shares_2006_2010.csv"),
                     "--tolerance", "0.5", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == EXIT_DISCREPANT, f"exit status {code}"
        rows = list(csv.DictReader(io.StringIO(out)))
        expected = {
            "capital_contribution.share": (9.31, 10.90),
            "labor_contribution.share": (107.45, 109.84),
            "tfp.share": (-19.15, -20.74),
        }
        assert {r["label"] for r in rows} == set(expected), [r["label"] for r in rows]
        for r in rows:
            pub, rec = expected[r["label"]]
            assert float(r["published"]) == pub
            assert abs(float(r["recomputed"]) - rec) <= 0.005, r
        return "3 share discrepancies, exit 3"

    _record(criterion, "4 Table 3 check at tolerance 0.5", check)


def test_c5_plan_gap(criterion):
    def check():
        targets = PlanTargets(
            period=(2006, 2010), va_growth_target=6.5, input_contribution_target=4.3, tfp_growth_target=2.2,
            tfp_share_target=33.8, labor_pp_growth_target=4.6, capital_pp_growth_target=0.1,
        )
        table = ShareTable((2006, 2010), {
            "output": ShareRow(3.76, 100.0),
            "capital_contribution": ShareRow(0.41, 9.31),
            "labor_contribution": ShareRow(4.13, 107.45),
            "tfp": ShareRow(-0.78, -19.15),
        })
        report = evaluate_plan(targets, RealizedSummary(table, capital_pp_growth=-2.95, labor_pp_growth=2.72))
        assert len(report.entries) == 6
        attained = [e.target for e in report.entries if e.attained]
        assert not attained, f"attained: {attained}"
        gap = {e.target: e.gap for e in report.entries}["tfp_share_target"]
        assert abs(gap - -52.95) <= 0.1, f"TFP share gap {gap}"
        return f"6/6 not attained, TFP share gap {gap:.2f}"

    _record(criterion, "5 fourth-plan gap report", check)


def test_c6_cobb_douglas_oracle(criterion):
    def check():
        rng = random.Random(20180309)
        worst_tfp = worst_identity = 0.0
        for _ in range(50):
            alpha = rng.uniform(0.05, 0.95)
            shares = fixed_shares(alpha)
            series, tfp_levels = cobb_douglas_series(rng, alpha, years=20)
            rows = decompose(growth_records(series, "log_difference"), shares)
            assert len(rows) == 19
            for row, prev, cur in zip(rows, tfp_levels, tfp_levels[1:]):
                truth = 100 * math.log(cur / prev)
                worst_tfp = max(worst_tfp, abs(row.tfp_hat - truth))
                assert abs(row.tfp_hat - truth) <= 1e-10, f"{row.year}: {row.tfp_hat} vs {truth}"
                scale = max(1.0, abs(row.q_hat), abs(row.contrib_capital), abs(row.contrib_labor))
                err = max(
                    abs(row.contrib_capital + row.contrib_labor + row.tfp_hat - row.q_hat),
                    abs(row.tfp_hat - row.tfp_via_partials),
                )
                worst_identity = max(worst_identity, err)
                assert err <= ULPS * scale, f"{row.year}: identity error {err}"
        return f"max TFP error {worst_tfp:.1e}, max identity error {worst_identity:.1e}"

    _record(criterion, "6 synthetic Cobb-Douglas oracle (50 x 20 years)", check)


finite = st.floats(min_value=-50, max_value=50, allow_nan=False)
alphas = st.floats(min_value=0, max_value=1)
pos = st.floats(min_value=1e-2, max_value=1e8)
scales = st.floats(min_value=1e-3, max_value=1e3)


ULPS = 16 * 2.220446049250313e-16


def _tight(a, b, *terms):
    return abs(a - b) <= ULPS * max(1.0, *(abs(t) for t in terms))


def test_c7_property_suite(criterion):
    @settings(max_examples=1000, deadline=None)
    @given(finite, finite, finite, alphas)
    def residual_identity(q, k, l, alpha):
        s = fixed_shares(alpha)
        t = tfp_growth(q, k, l, s)
        assert _tight(t + s.alpha * k + s.beta * l, q, q, k, l)

    @settings(max_examples=1000, deadline=None)
    @given(finite, finite, finite, alphas)
    def partial_equivalence(q, k, l, alpha):
        s = fixed_shares(alpha)
        assert _tight(tfp_growth(q, k, l, s), tfp_from_partials(q - k, q - l, s), q, k, l)

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.tuples(pos, pos, pos), min_size=3, max_size=8), scales, scales, scales, alphas)
    def scale_invariance(levels, cq, ck, cl, alpha):
        s = fixed_shares(alpha)
        base = validate_series([(2000 + i, q, k, l) for i, (q, k, l) in enumerate(levels)])
        scaled = validate_series([(2000 + i, q * cq, k * ck, l * cl) for i, (q, k, l) in enumerate(levels)])
        a, b = growth_records(base), growth_records(scaled)
        ra, rb = decompose(a, s), decompose(b, s)
        for x, y, dx, dy in zip(a, b, ra, rb):
            magnitude = max(1.0, abs(x.q_hat), abs(x.k_hat), abs(x.l_hat))
            for col in ("q_hat", "k_hat", "l_hat", "apk_hat", "apl_hat", "tfp_hat"):
                u, v = getattr(dx if col == "tfp_hat" else x, col), getattr(dy if col == "tfp_hat" else y, col)
                assert math.isclose(u, v, rel_tol=1e-9, abs_tol=1e-9 * magnitude), col
        period = (2001, 2000 + len(levels) - 1)
        mean_q = mean_growth(a, "q_hat")
        if abs(mean_q) > 1.0:
            ta, tb = share_table(ra, period), share_table(rb, period)
            worst = max(max(1.0, abs(x.q_hat), abs(x.k_hat), abs(x.l_hat)) for x in a)
            for name in ta.rows:
                tol = 1e-9 * 100 * worst / abs(mean_q)
                assert math.isclose(ta.share(name), tb.share(name), rel_tol=1e-9, abs_tol=tol), name

    @settings(max_examples=1000, deadline=None)
    @given(st.lists(st.tuples(finite, finite, finite), min_size=1, max_size=20), alphas)
    def share_normalization(triples, alpha):
        records = [GrowthRecord(2000 + i, q, k, l) for i, (q, k, l) in enumerate(triples)]
        rows = decompose(records, fixed_shares(alpha))
        if abs(mean_growth(rows, "q_hat")) < 0.01:
            return
        t = share_table(rows, (2000, 2000 + len(rows) - 1))
        assert t.share("output") == 100.0
        parts = t.share("capital_contribution") + t.share("labor_contribution") + t.share("tfp")
        assert math.isclose(parts, 100.0, rel_tol=1e-9)

    @settings(max_examples=1000, deadline=None)
    @given(st.floats(min_value=-30, max_value=30), alphas)
    def balanced_growth_zero_residual(g, alpha):
        assert abs(tfp_growth(g, g, g, fixed_shares(alpha))) <= ULPS * max(1.0, abs(g))

    def check():
        for prop in (residual_identity, partial_equivalence, scale_invariance, share_normalization,
                     balanced_growth_zero_residual):
            prop()
        return "5 properties x 1000 examples"

    _record(criterion, "7 property suite", check)


def test_c8_shares_estimator(criterion):
    money = st.floats(min_value=1e-3, max_value=1e9)
    fractions = st.floats(min_value=0, max_value=1)

    @st.composite
    def rows(draw):
        va = draw(money)
        comp = draw(st.floats(min_value=0, max_value=1)) * va
        mixed = draw(st.floats(min_value=0, max_value=1)) * (va - comp)
        return comp, mixed, va

    @settings(max_examples=1000, deadline=None)
    @given(rows(), st.floats(min_value=1e-3, max_value=1e3), fractions)
    def scale_invariant(row, c, f):
        comp, mixed, va = row
        scaled = (comp * c, mixed * c, va * c)
        assume(scaled[0] + scaled[1] <= scaled[2])
        a = estimate_shares(InputOutputRow(*row), f)
        b = estimate_shares(InputOutputRow(*scaled), f)
        assert math.isclose(a.beta, b.beta, rel_tol=1e-12, abs_tol=1e-12)
        assert math.isclose(a.alpha, b.alpha, rel_tol=1e-12, abs_tol=1e-12)

    @settings(max_examples=1000, deadline=None)
    @given(rows(), st.floats(min_value=0, max_value=1), fractions)
    def monotone(row, bump, f):
        comp, mixed, va = row
        more = comp + bump * (va - comp - mixed)
        assume(more + mixed <= va)
        a = estimate_shares(InputOutputRow(comp, mixed, va), f)
        b = estimate_shares(InputOutputRow(more, mixed, va), f)
        assert b.beta >= a.beta

    def check():
        scale_invariant()
        monotone()
        s = estimate_shares(InputOutputRow(30, 20, 100), 0.5)
        assert (s.alpha, s.beta) == (0.60, 0.40), s
        return "scale invariance, monotonicity, (30,20,100) -> (0.60, 0.40)"

    _record(criterion, "8 shares estimator", check)
