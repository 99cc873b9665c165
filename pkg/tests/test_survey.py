"""Survey reconstruction tests.

Point-estimate expectations for the synthetic 100-per-order table were
computed by hand from the defining arithmetic and frozen here as exact
rationals.  Statistical routes are cross-checked against scipy's independent
implementations.
"""

import json
import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import chi2_contingency

from quasilogic import hilbert, survey
from quasilogic.errors import (
    BadConfidenceError,
    DuplicateCellError,
    LowExpectedCountWarning,
    MissingCellError,
    NegativeCountError,
    SchemaError,
    TooFewIterationsError,
)
from quasilogic.survey import CELLS, SequentialCountTable


def make_table(ab, ba, **kwargs) -> SequentialCountTable:
    """Counts given in CELLS order: (0,0), (0,1), (1,0), (1,1)."""
    return SequentialCountTable(
        counts_ab=dict(zip(CELLS, ab)), counts_ba=dict(zip(CELLS, ba)), **kwargs
    )


@pytest.fixture
def synthetic() -> SequentialCountTable:
    return make_table((30, 20, 10, 40), (35, 5, 15, 45))


@pytest.fixture
def clinton_gore(data_dir) -> SequentialCountTable:
    return survey.load_counts(str(data_dir / "clinton_gore_1997.csv"))


count_arrays = st.lists(st.integers(min_value=0, max_value=500), min_size=4, max_size=4)


class TestParsing:
    def test_well_formed(self, synthetic):
        text = synthetic.to_csv()
        parsed = survey.parse_counts(text)
        assert parsed.counts_ab == synthetic.counts_ab
        assert parsed.counts_ba == synthetic.counts_ba

    def test_bundled_fixture_parses_with_labels(self, clinton_gore):
        assert clinton_gore.label_a == "Clinton"
        assert clinton_gore.label_b == "Gore"
        assert clinton_gore.n_ab == 501 and clinton_gore.n_ba == 501

    def test_missing_cell(self, synthetic):
        lines = synthetic.to_csv().strip().splitlines()
        without = [l for l in lines if not l.startswith("BA,1,0")]
        with pytest.raises(MissingCellError):
            survey.parse_counts("\n".join(without))

    def test_negative_count(self, synthetic):
        text = synthetic.to_csv().replace("AB,1,1,40", "AB,1,1,-3")
        with pytest.raises(NegativeCountError):
            survey.parse_counts(text)

    def test_duplicate_cell(self, synthetic):
        text = synthetic.to_csv() + "AB,1,1,40\n"
        with pytest.raises(DuplicateCellError):
            survey.parse_counts(text)

    def test_bad_header(self):
        with pytest.raises(SchemaError):
            survey.parse_counts("a,b,c,d\nAB,0,0,1\n")

    def test_bad_order_token(self, synthetic):
        text = synthetic.to_csv().replace("AB,0,0,30", "XY,0,0,30")
        with pytest.raises(SchemaError):
            survey.parse_counts(text)

    def test_non_integer_count(self, synthetic):
        text = synthetic.to_csv().replace("AB,1,1,40", "AB,1,1,forty")
        with pytest.raises(SchemaError) as err:
            survey.parse_counts(text)
        assert "line" in str(err.value)

    def test_multi_outcome_rejected(self, synthetic):
        text = synthetic.to_csv().replace("AB,1,1,40", "AB,2,1,40")
        with pytest.raises(SchemaError):
            survey.parse_counts(text)

    def test_empty_document(self):
        with pytest.raises(SchemaError):
            survey.parse_counts("\n\n")

    def test_zero_total_group_rejected(self):
        with pytest.raises(SchemaError):
            make_table((0, 0, 0, 0), (1, 1, 1, 1))


class TestSequentialProbs:
    def test_division(self, synthetic):
        p_ab, p_ba = survey.sequential_probs(synthetic)
        assert p_ab[(1, 1)] == F(2, 5)
        assert p_ab[(1, 0)] == F(1, 10)
        assert p_ba[(1, 1)] == F(9, 20)

    @given(count_arrays, count_arrays)
    @settings(max_examples=50, deadline=None)
    def test_each_table_sums_to_one_exactly(self, ab, ba):
        if sum(ab) == 0 or sum(ba) == 0:
            return
        p_ab, p_ba = survey.sequential_probs(make_table(ab, ba))
        assert sum(p_ab.values()) == 1
        assert sum(p_ba.values()) == 1

    def test_uniform(self):
        p_ab, _ = survey.sequential_probs(make_table((25, 25, 25, 25), (25, 25, 25, 25)))
        assert all(v == F(1, 4) for v in p_ab.values())


class TestReconstruction:
    def test_synthetic_point_estimates(self, synthetic):
        logical_ab, logical_ba = survey.reconstruct_logical_joint(synthetic)
        assert logical_ab[(1, 1)] == F(2, 5)     # 0.40
        assert logical_ba[(1, 1)] == F(9, 20)    # 0.45
        assert sum(logical_ab.values()) == 1
        assert sum(logical_ba.values()) == 1

    def test_synthetic_xor_estimates(self, synthetic):
        xor_ab, xor_ba = survey.xor_estimates(synthetic)
        assert xor_ab == F(3, 10)
        assert xor_ba == F(1, 5)

    def test_balance_identity_on_estimates(self, synthetic):
        # xor + 2*conjunction equals the sum of the two first-question marginals
        p_ab, p_ba = survey.sequential_probs(synthetic)
        logical_ab, logical_ba = survey.reconstruct_logical_joint(synthetic)
        xor_ab, xor_ba = survey.xor_estimates(synthetic)
        rhs = (p_ab[(1, 0)] + p_ab[(1, 1)]) + (p_ba[(1, 0)] + p_ba[(1, 1)])
        assert xor_ab + 2 * logical_ab[(1, 1)] == rhs == F(11, 10)
        assert xor_ba + 2 * logical_ba[(1, 1)] == rhs

    @given(count_arrays, count_arrays)
    @settings(max_examples=50, deadline=None)
    def test_marginality_exact_for_any_counts(self, ab, ba):
        if sum(ab) == 0 or sum(ba) == 0:
            return
        table = make_table(ab, ba)
        p_ab, p_ba = survey.sequential_probs(table)
        logical_ab, logical_ba = survey.reconstruct_logical_joint(table)
        for a in (0, 1):
            row = logical_ab[(a, 0)] + logical_ab[(a, 1)]
            assert row == p_ab[(a, 0)] + p_ab[(a, 1)]
        for b in (0, 1):
            col = logical_ab[(0, b)] + logical_ab[(1, b)]
            assert col == p_ba[(b, 0)] + p_ba[(b, 1)]
        assert sum(logical_ab.values()) == 1
        assert sum(logical_ba.values()) == 1
        # the xor/conjunction balance holds for every table, both orders
        xor_ab, xor_ba = survey.xor_estimates(table)
        rhs = (p_ab[(1, 0)] + p_ab[(1, 1)]) + (p_ba[(1, 0)] + p_ba[(1, 1)])
        assert xor_ab + 2 * logical_ab[(1, 1)] == rhs
        assert xor_ba + 2 * logical_ba[(1, 1)] == rhs

    def test_boolean_reduction(self):
        # both orders drawn from one product-form joint: correction vanishes
        table = make_table((30, 30, 20, 20), (30, 20, 30, 20))
        p_ab, _ = survey.sequential_probs(table)
        logical_ab, logical_ba = survey.reconstruct_logical_joint(table)
        for cell in CELLS:
            assert logical_ab[cell] == p_ab[cell]

    def test_round_trip_from_model_probabilities(self, tilted_example):
        rho, a, b = tilted_example
        p_ab, p_ba = hilbert.model_sequential_probabilities(rho, a, b)
        logical_ab, logical_ba = survey.logical_tables_from_probs(p_ab, p_ba)
        ops_a = {1: a, 0: hilbert.complement_projector(a)}
        ops_b = {1: b, 0: hilbert.complement_projector(b)}
        for cell in CELLS:
            model = hilbert.logical_joint(rho, ops_a[cell[0]], ops_b[cell[1]])
            assert logical_ab[cell] == pytest.approx(model, abs=1e-10)
            assert logical_ba[cell] == pytest.approx(model, abs=1e-10)

    def test_round_trip_many_seeds(self):
        for seed in range(10):
            rho = hilbert.sample_state(2, "pure" if seed % 2 else "mixed", seed=seed)
            a = hilbert.sample_projector(2, 1, seed=seed + 100)
            b = hilbert.sample_projector(2, 1, seed=seed + 200)
            p_ab, p_ba = hilbert.model_sequential_probabilities(rho, a, b)
            logical_ab, logical_ba = survey.logical_tables_from_probs(p_ab, p_ba)
            expected = hilbert.logical_joint(rho, a, b)
            assert logical_ab[(1, 1)] == pytest.approx(expected, abs=1e-10)
            assert logical_ba[(1, 1)] == pytest.approx(expected, abs=1e-10)


class TestQQEquality:
    def test_identical_distributions(self):
        table = make_table((30, 20, 10, 40), (30, 10, 20, 40))
        statistic, p_value = survey.qq_equality_stat(table)
        assert statistic == 0.0
        assert p_value == 1.0

    def test_synthetic_example(self, synthetic):
        statistic, p_value = survey.qq_equality_stat(synthetic)
        xor_ab, xor_ba = survey.xor_estimates(synthetic)
        assert float(xor_ab - xor_ba) == pytest.approx(0.10)
        logical_ab, logical_ba = survey.reconstruct_logical_joint(synthetic)
        assert logical_ab[(1, 1)] - logical_ba[(1, 1)] == F(-1, 20)
        assert statistic > 0
        assert 0 < p_value < 1

    def test_z_squared_matches_chi2_contingency(self, synthetic):
        statistic, _ = survey.qq_equality_stat(synthetic)
        x1 = synthetic.counts_ab[(1, 0)] + synthetic.counts_ab[(0, 1)]
        x2 = synthetic.counts_ba[(1, 0)] + synthetic.counts_ba[(0, 1)]
        contingency = [
            [x1, synthetic.n_ab - x1],
            [x2, synthetic.n_ba - x2],
        ]
        expected = chi2_contingency(contingency, correction=False).statistic
        assert statistic**2 == pytest.approx(expected, rel=1e-12)

    def test_degenerate_equal_tables(self):
        table = make_table((100, 0, 0, 0), (100, 0, 0, 0))
        statistic, p_value = survey.qq_equality_stat(table)
        assert (statistic, p_value) == (0.0, 1.0)


class TestOrderEffect:
    def test_identical_distributions(self):
        table = make_table((30, 20, 10, 40), (30, 10, 20, 40))
        statistic, p_value = survey.order_effect_stat(table)
        assert statistic == pytest.approx(0.0, abs=1e-12)
        assert p_value == pytest.approx(1.0)

    def test_matches_scipy(self, synthetic):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", LowExpectedCountWarning)
            statistic, p_value = survey.order_effect_stat(synthetic)
        observed = [
            [synthetic.counts_ab[(a, b)] for a in (0, 1) for b in (0, 1)],
            [synthetic.counts_ba[(b, a)] for a in (0, 1) for b in (0, 1)],
        ]
        reference = chi2_contingency(observed, correction=False)
        assert statistic == pytest.approx(reference.statistic, rel=1e-12)
        assert p_value == pytest.approx(reference.pvalue, rel=1e-12)
        assert reference.dof == 3

    def test_low_expected_count_warns_but_computes(self):
        table = make_table((2, 1, 1, 96), (96, 1, 1, 2))
        with pytest.warns(LowExpectedCountWarning):
            statistic, _ = survey.order_effect_stat(table)
        assert statistic > 0


class TestBootstrap:
    def test_deterministic(self, synthetic):
        a = survey.bootstrap_ci(synthetic, ("logical_ab", (1, 1)), 500, 0.95, seed=9)
        b = survey.bootstrap_ci(synthetic, ("logical_ab", (1, 1)), 500, 0.95, seed=9)
        assert a == b

    def test_degenerate_table_zero_width(self):
        table = make_table((0, 0, 0, 50), (0, 0, 0, 50))
        lo, hi = survey.bootstrap_ci(table, ("logical_ab", (1, 1)), 500, 0.95, seed=1)
        assert lo == hi == 1.0

    def test_interval_contains_point_estimate(self, synthetic):
        lo, hi = survey.bootstrap_ci(synthetic, ("logical_ab", (1, 1)), 10_000, 0.95, seed=2)
        assert lo < 0.40 < hi

    def test_width_shrinks_with_sample_size(self, synthetic):
        scaled = make_table(
            tuple(4 * synthetic.counts_ab[c] for c in CELLS),
            tuple(4 * synthetic.counts_ba[c] for c in CELLS),
        )
        lo1, hi1 = survey.bootstrap_ci(synthetic, ("logical_ab", (1, 1)), 10_000, 0.95, seed=3)
        lo4, hi4 = survey.bootstrap_ci(scaled, ("logical_ab", (1, 1)), 10_000, 0.95, seed=3)
        ratio = (hi4 - lo4) / (hi1 - lo1)
        assert 0.35 < ratio < 0.65  # ~1/sqrt(4)

    def test_order_difference_target(self, synthetic):
        lo, hi = survey.bootstrap_ci(synthetic, ("order_difference", (1, 1)), 1000, 0.95, seed=4)
        assert lo < -0.05 < hi  # point estimate 0.40 - 0.45

    def test_validation(self, synthetic):
        with pytest.raises(TooFewIterationsError):
            survey.bootstrap_ci(synthetic, ("logical_ab", (1, 1)), 50, 0.95, seed=0)
        with pytest.raises(BadConfidenceError):
            survey.bootstrap_ci(synthetic, ("logical_ab", (1, 1)), 500, 1.5, seed=0)
        with pytest.raises(ValueError):
            survey.bootstrap_ci(synthetic, ("logical_ab", (1, 2)), 500, 0.95, seed=0)


class TestSimulateCounts:
    def test_expected_counts_preserve_total(self):
        p = {(0, 0): 0.451, (0, 1): 0.049, (1, 0): 0.049, (1, 1): 0.451}
        table = survey.simulate_counts(p, p, 1000, seed=0, method="expected")
        assert table.n_ab == table.n_ba == 1000
        assert table.counts_ab[(0, 0)] == 451

    def test_multinomial_deterministic(self):
        p = {(0, 0): 0.25, (0, 1): 0.25, (1, 0): 0.25, (1, 1): 0.25}
        t1 = survey.simulate_counts(p, p, 500, seed=6)
        t2 = survey.simulate_counts(p, p, 500, seed=6)
        assert t1.counts_ab == t2.counts_ab and t1.counts_ba == t2.counts_ba


class TestClassicalityReport:
    def test_classical_product_data_has_no_flags(self):
        table = make_table((30, 30, 20, 20), (30, 20, 30, 20))
        report = survey.classicality_report(table, iterations=500, seed=0)
        assert not any(report.classicality_flags_ab.values())
        assert not any(report.classicality_flags_ba.values())

    def test_clinton_gore_reproduces_published_pattern(self, clinton_gore):
        report = survey.classicality_report(clinton_gore, iterations=4000, seed=42)
        # strong raw order effect
        assert report.order_p_value < 0.05
        # question-order equality holds
        assert report.qq_p_value > 0.05
        # reconstructed joints virtually identical across orders
        for cell in CELLS:
            width = (
                report.bootstrap_intervals["order_difference"][cell][1]
                - report.bootstrap_intervals["order_difference"][cell][0]
            )
            assert report.order_invariance_gap[cell] <= width
        # the yes-to-A, no-to-B cells dip below zero but not significantly
        assert report.logical_ab[(1, 0)] < 0
        assert report.logical_ba[(1, 0)] < 0
        lo_ab, hi_ab = report.bootstrap_intervals["logical_ab"][(1, 0)]
        lo_ba, hi_ba = report.bootstrap_intervals["logical_ba"][(1, 0)]
        assert lo_ab < 0 < hi_ab
        assert lo_ba < 0 < hi_ba
        assert not any(report.classicality_flags_ab.values())
        assert not any(report.classicality_flags_ba.values())

    def test_strongly_nonclassical_model_is_flagged(self, tilted_example):
        rho, a, b = tilted_example
        p_ab, p_ba = hilbert.model_sequential_probabilities(rho, a, b)
        table = survey.simulate_counts(p_ab, p_ba, 100_000, seed=5, method="multinomial")
        report = survey.classicality_report(table, iterations=2000, seed=7)
        assert report.logical_ab[(1, 1)] == pytest.approx(-0.1, abs=0.01)
        assert report.classicality_flags_ab[(1, 1)]
        assert report.classicality_flags_ba[(1, 1)]

    def test_json_report_is_deterministic_and_complete(self, synthetic):
        r1 = survey.classicality_report(synthetic, iterations=200, seed=3).to_json()
        r2 = survey.classicality_report(synthetic, iterations=200, seed=3).to_json()
        assert r1 == r2
        data = json.loads(r1)
        assert data["logical_ab_exact"]["11"] == "2/5"
        assert data["config"]["seed"] == 3
        assert set(data["bootstrap"]) == {"logical_ab", "logical_ba", "order_difference"}

    def test_plot_rows_cover_all_series(self, synthetic):
        report = survey.classicality_report(synthetic, iterations=200, seed=3)
        rows = report.plot_rows()
        assert len(rows) == 16
        series = {s for s, _, _ in rows}
        assert series == {"sequential_ab", "sequential_ba", "logical_ab", "logical_ba"}
        text = report.plot_csv()
        assert text.splitlines()[0] == "series,cell,value"

    def test_svg_renders_all_series(self, synthetic):
        svg = survey.classicality_report(synthetic, iterations=200, seed=3).to_svg()
        assert svg.startswith("<svg")
        assert svg.count("<rect") >= 16
        for color in ("#1f5fa8", "#7fb2e5", "#b22222", "#f08080"):
            assert color in svg

    def test_validation(self, synthetic):
        with pytest.raises(TooFewIterationsError):
            survey.classicality_report(synthetic, iterations=10)
        with pytest.raises(BadConfidenceError):
            survey.classicality_report(synthetic, iterations=200, confidence=0.0)
