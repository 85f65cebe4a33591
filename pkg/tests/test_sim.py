"""Tests for the Monte Carlo validator.

Oracles: closed-form geometric moments (mean 1/p, variance (1-p)/p**2
per batch) bound the sampling error; trivial q = 1 cases are exact.
"""

import math

import pytest

from pooldesign import (
    Partition,
    expected_waiting_time,
    per_item_cost,
    simulate_design,
    simulate_stream_rate,
)


def total_tests_std(sizes, q, replications):
    """Std error of the mean total tests from geometric moments."""
    variance = 0.0
    for n in sizes:
        p = q**n
        variance += (1 - p) / p**2
    return math.sqrt(variance / replications)


class TestDeterminism:
    def test_identical_runs_identical_reports(self):
        a = simulate_design((3, 5), 0.9, 2000, 42)
        b = simulate_design((3, 5), 0.9, 2000, 42)
        assert a == b

    def test_seed_changes_the_stream(self):
        a = simulate_design((3,), 0.7, 1000, 1)
        b = simulate_design((3,), 0.7, 1000, 2)
        assert a.mean_tests != b.mean_tests

    def test_frozen_stream_regression(self):
        # guards the documented draw pipeline against accidental change
        report = simulate_design((2,), 0.5, 5, 123)
        assert report.mean_tests == 1.6
        assert report.variance_tests == 0.8

    def test_partition_order_is_canonical(self):
        # (5,3) and (3,5) are the same design, so the same draws
        assert simulate_design((5, 3), 0.9, 500, 9) == simulate_design((3, 5), 0.9, 500, 9)

    @pytest.mark.parametrize("seed", (0, 7, 77, 12345))
    def test_replications_extend_the_stream(self, seed):
        # replication r always consumes the same slice of the stream,
        # so a 1-rep mean is the first draw of a 2-rep mean
        one = simulate_design((4,), 0.8, 1, seed).mean_tests
        two = simulate_design((4,), 0.8, 2, seed).mean_tests
        second_draw = 2 * two - one
        assert second_draw == pytest.approx(round(second_draw), abs=1e-9)
        assert second_draw >= 1.0

    def test_negative_seed_accepted(self):
        report = simulate_design((2,), 0.6, 100, -5)
        assert report == simulate_design((2,), 0.6, 100, -5)


class TestReportFields:
    def test_analytic_value_is_exact(self):
        report = simulate_design((83, 83, 84), 0.99, 100, 0)
        assert report.analytic_tests == expected_waiting_time((83, 83, 84), 0.99)

    def test_replications_echoed(self):
        assert simulate_design((1,), 0.5, 321, 0).replications == 321

    def test_mean_at_least_one_test_per_batch(self):
        report = simulate_design((1, 2, 3), 0.9, 500, 3)
        assert report.mean_tests >= 3.0

    def test_std_error_from_variance(self):
        report = simulate_design((4, 4), 0.8, 400, 5)
        assert report.std_error == math.sqrt(report.variance_tests / 400)

    def test_z_score_definition(self):
        report = simulate_design((4, 4), 0.8, 400, 5)
        expected = (report.mean_tests - report.analytic_tests) / report.std_error
        assert report.z_score == expected


class TestTrivialEdges:
    def test_certain_pass_is_exactly_one_test_per_batch(self):
        report = simulate_design((5, 2, 9), 1.0, 50, 8)
        assert report.mean_tests == 3.0
        assert report.variance_tests == 0.0
        assert report.z_score == 0.0

    def test_single_replication_has_no_error_bar(self):
        report = simulate_design((1,), 0.5, 1, 0)
        assert report.variance_tests == 0.0
        assert report.std_error == 0.0
        # a single integer draw cannot hit the analytic 2.0 tests
        assert report.mean_tests != report.analytic_tests
        assert math.isnan(report.z_score)

    def test_single_replication_exact_match_scores_zero(self):
        report = simulate_design((7,), 1.0, 1, 4)
        assert report.mean_tests == report.analytic_tests == 1.0
        assert report.z_score == 0.0

    def test_stream_rate_trivial(self):
        assert simulate_stream_rate(1, 1.0, 10, 0) == 1.0


class TestStatisticalAgreement:
    def test_single_item_coin_flip_mean(self):
        # geometric with p = 1/2: mean 2, variance 2
        reps = 200_000
        report = simulate_design((1,), 0.5, reps, 2024)
        bound = 4 * total_tests_std((1,), 0.5, reps)
        assert abs(report.mean_tests - 2.0) <= bound
        assert abs(report.variance_tests - 2.0) <= 0.25

    @pytest.mark.parametrize("seed", (7, 42))
    def test_pooled_design_z_scores(self, seed):
        report = simulate_design((83, 83, 84), 0.99, 20_000, seed)
        assert abs(report.z_score) <= 4.0

    @pytest.mark.parametrize("sizes,q", [((2, 3), 0.8), ((10,), 0.95), ((1, 1, 4), 0.6)])
    def test_mean_within_four_analytic_sigmas(self, sizes, q):
        reps = 50_000
        report = simulate_design(sizes, q, reps, 11)
        bound = 4 * total_tests_std(sizes, q, reps)
        assert abs(report.mean_tests - report.analytic_tests) <= bound


class TestStreamRate:
    def test_matches_single_batch_simulation(self):
        report = simulate_design(Partition((10,)), 0.95, 500, 11)
        assert simulate_stream_rate(10, 0.95, 500, 11) == report.mean_tests / 10

    def test_converges_to_per_item_cost(self):
        reps = 50_000
        rate = simulate_stream_rate(10, 0.95, reps, 11)
        bound = 4 * total_tests_std((10,), 0.95, reps) / 10
        assert abs(rate - per_item_cost(10, 0.95)) <= bound


class TestValidation:
    def test_q_zero_rejected(self):
        with pytest.raises(ValueError, match="q = 0"):
            simulate_design((3,), 0.0, 10, 0)

    @pytest.mark.parametrize("bad_q", (-0.5, 1.5))
    def test_q_outside_unit_interval(self, bad_q):
        with pytest.raises(ValueError):
            simulate_design((3,), bad_q, 10, 0)

    @pytest.mark.parametrize("bad_reps", (0, -1, 2.5, True))
    def test_replications_validated(self, bad_reps):
        with pytest.raises(ValueError):
            simulate_design((3,), 0.9, bad_reps, 0)

    @pytest.mark.parametrize("bad_seed", (1.5, "7", None))
    def test_seed_validated(self, bad_seed):
        with pytest.raises(ValueError):
            simulate_design((3,), 0.9, 10, bad_seed)

    def test_partition_validated(self):
        with pytest.raises(ValueError):
            simulate_design((0, 3), 0.9, 10, 0)

    def test_overflowing_design_rejected_like_analytic_path(self):
        with pytest.raises(OverflowError):
            simulate_design((600,), 0.3, 10, 0)
