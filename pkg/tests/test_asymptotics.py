import logging
from fractions import Fraction

import numpy as np
import pytest

from core.errors import DomainError
from core.semigroup import new_semigroup
from tools.asymptotics import (
    equidistributed_for_all_moduli,
    equidistribution_check,
    leading_coefficient,
    leading_term,
    limiting_mean,
    moment_convergence,
    stats,
)
from tools.enumeration import length_distribution


# =============================================================================
# LEADING TERMS
# =============================================================================


def test_leading_coefficient_of_the_count(bigger_delta):
    assert leading_coefficient(bigger_delta, 0, 1) == Fraction(1, 9036690)
    # The whole multiset sits in one class mod 6, so restricting changes nothing.
    assert leading_coefficient(bigger_delta, 0, 6) == Fraction(1, 9036690)
    assert leading_coefficient(bigger_delta, 0, 5) == Fraction(1, 5 * 9036690)


def test_leading_term_against_the_count(bigger_delta):
    main = leading_term(bigger_delta, 0, 1, 0, 5000)
    assert main == Fraction(125 * 10**9, 9036690)
    assert abs(14500 - main) / 14500 < Fraction(5, 100)
    assert leading_term(bigger_delta, 0, 6, 4, 5000) == main
    assert leading_term(bigger_delta, 0, 6, 0, 5000) == 0


def test_leading_term_for_first_moment_matches_mean(mcnugget):
    n = 1200
    first = leading_term(mcnugget, 1, 1, 0, n)
    count = leading_term(mcnugget, 0, 1, 0, n)
    assert first / count == limiting_mean(mcnugget, n) == Fraction(59 * n, 540)


def test_leading_coefficient_rejects_negative_power(mcnugget):
    with pytest.raises(DomainError):
        leading_coefficient(mcnugget, -1, 1)


def test_delta_one_means_equidistribution():
    assert equidistributed_for_all_moduli(new_semigroup([6, 9, 20]))
    assert not equidistributed_for_all_moduli(new_semigroup([17, 29, 47, 65]))
    assert not equidistributed_for_all_moduli(new_semigroup([3, 5]))


# =============================================================================
# STATISTICS
# =============================================================================


def test_stats_of_zero(mcnugget):
    summary = stats(mcnugget, 0)
    assert not summary.empty
    assert summary.total == 1
    assert summary.mean == 0 and summary.variance == 0
    assert summary.skewness is None
    assert summary.median == summary.mode == 0
    assert summary.harmonic_mean is None
    assert summary.geometric_mean == 0.0


def test_stats_of_small_element(mcnugget):
    summary = stats(mcnugget, 60)
    assert summary.total == 5
    assert summary.mean == Fraction(37, 5)
    assert summary.median == 8
    assert summary.mode == 3
    assert summary.harmonic_mean == Fraction(12600, 2047)
    assert summary.geometric_mean == pytest.approx(15120 ** 0.2, rel=1e-12)
    assert summary.harmonic_mean < summary.geometric_mean < summary.mean


def test_mean_approaches_the_limit(mcnugget, mcnugget_1000):
    summary = stats(mcnugget, 1000, distribution=mcnugget_1000)
    assert summary.total == 465
    limit = limiting_mean(mcnugget, 1000)
    assert float(limit) == pytest.approx(109.26, abs=0.01)
    assert abs(summary.mean - limit) / limit < Fraction(3, 100)

    far = stats(mcnugget, 10_000)
    far_limit = limiting_mean(mcnugget, 10_000)
    assert abs(far.mean - far_limit) / far_limit < Fraction(1, 100)


@pytest.mark.parametrize("residue", range(5))
def test_restricted_means_share_the_limit(mcnugget, mcnugget_1000, residue):
    summary = stats(mcnugget, 1000, 5, residue, distribution=mcnugget_1000)
    limit = limiting_mean(mcnugget, 1000)
    assert abs(summary.mean - limit) / limit < Fraction(3, 100)


def test_unattainable_class_is_empty(bigger_delta, bigger_delta_5000):
    summary = stats(bigger_delta, 5000, 6, 0, distribution=bigger_delta_5000)
    assert summary.empty
    assert summary.total == 0
    assert summary.mean is None and summary.median is None
    assert summary.harmonic_mean is None and summary.geometric_mean is None


def test_restricted_harmonic_and_geometric_means(mcnugget):
    # lengths of 60 are 3, 7, 8, 9, 10; the class 1 mod 2 keeps 3, 7 and 9
    summary = stats(mcnugget, 60, 2, 1)
    assert summary.total == 3
    assert summary.harmonic_mean == 3 / (Fraction(1, 3) + Fraction(1, 7) + Fraction(1, 9))
    assert summary.geometric_mean == pytest.approx(189 ** (1 / 3), rel=1e-12)


def test_limiting_mean_is_scaled_for_a_class(mcnugget, bigger_delta, mcnugget_1000):
    whole = limiting_mean(mcnugget, 1000)
    assert limiting_mean(mcnugget, 1000, 5, 2) == whole / 5
    share = Fraction(mcnugget_1000.power_sum(1, 5, 2), mcnugget_1000.total)
    assert abs(share - whole / 5) / (whole / 5) < Fraction(5, 100)

    assert limiting_mean(bigger_delta, 5000, 6, 4) == limiting_mean(bigger_delta, 5000)
    assert limiting_mean(bigger_delta, 5000, 4, 2) == limiting_mean(bigger_delta, 5000) / 2
    assert limiting_mean(bigger_delta, 5000, 6, 0) == 0


def test_stats_needs_both_modulus_and_residue(mcnugget):
    with pytest.raises(DomainError):
        stats(mcnugget, 100, modulus=5)
    with pytest.raises(DomainError):
        stats(mcnugget, 100, residue=2)


def test_stats_reuses_distribution(worked_example):
    distribution = length_distribution(worked_example, 434)
    assert stats(worked_example, 434, distribution=distribution) == stats(worked_example, 434)


# =============================================================================
# CONVERGENCE REPORTS
# =============================================================================


@pytest.mark.parametrize("residue", range(5))
def test_lengths_equidistribute_mod_five(mcnugget, residue):
    report = equidistribution_check(mcnugget, 5, residue, 0, 1, [1000])
    assert report.rows[0].limit == Fraction(1, 5)
    assert report.final_gap < Fraction(5, 1000)


def test_restricted_limit_carries_the_gamma_factor(bigger_delta):
    report = equidistribution_check(bigger_delta, 4, 0, 0, 1, [5000])
    assert report.rows[0].limit == Fraction(1, 2)
    assert report.rows[0].empirical == Fraction(7349, 14500)
    assert report.final_gap < Fraction(1, 100)


def test_window_converges(mcnugget):
    report = equidistribution_check(mcnugget, 1, 0, Fraction(1, 10), Fraction(1, 8), [600, 1200, 2400, 4800])
    assert report.trend_decreasing
    assert report.final_gap < Fraction(2, 100)
    assert report.query["alpha"] == "1/10"


def test_unattainable_class_has_zero_limit(bigger_delta):
    report = equidistribution_check(bigger_delta, 6, 0, 0, 1, [5000, 5006])
    assert all(row.limit == 0 and row.empirical == 0 for row in report.rows)
    assert report.final_gap == 0


def test_single_point_window(mcnugget):
    report = equidistribution_check(mcnugget, 1, 0, Fraction(1, 7), Fraction(1, 7), [1000])
    assert report.rows[0].limit == 0
    assert report.rows[0].empirical == 0


def test_schedule_errors(mcnugget, bigger_delta):
    with pytest.raises(DomainError, match="mixes"):
        equidistribution_check(bigger_delta, 6, 4, 0, 1, [5000, 5001])
    with pytest.raises(DomainError):
        equidistribution_check(mcnugget, 5, 0, 0, 1, [])
    with pytest.raises(DomainError):
        equidistribution_check(mcnugget, 5, 0, 0, 1, [-3])
    with pytest.raises(DomainError):
        equidistribution_check(mcnugget, 5, 0, Fraction(1, 6), Fraction(1, 9), [100])
    with pytest.raises(DomainError):
        equidistribution_check(new_semigroup([3, 5]), 2, 0, 0, 1, [100])
    with pytest.raises(DomainError):
        moment_convergence(mcnugget, 1, [0, 100])


@pytest.mark.parametrize("p", [1, 2])
def test_scaled_moments_converge(mcnugget, p):
    schedule = [int(n) for n in np.geomspace(300, 4800, 10).round()]
    report = moment_convergence(mcnugget, p, schedule)
    assert len(report.rows) == 10
    assert report.trend_decreasing
    assert report.final_gap / report.rows[-1].limit < Fraction(5, 100)
    if p == 1:
        assert report.rows[-1].limit == Fraction(59, 540)


def test_growing_gap_is_logged(mcnugget, caplog):
    with caplog.at_level(logging.WARNING, logger="tools.asymptotics"):
        report = moment_convergence(mcnugget, 1, [4800, 60])
    assert not report.trend_decreasing
    assert "not shrinking" in caplog.text
