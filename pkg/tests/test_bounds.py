import dataclasses
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from analysis import (
    BoundDomainError,
    SplitExp,
    bounds_report,
    corollary1_bounds,
    d_spectrum,
    dee,
    distance_profile,
    f_monotone,
    lower_bound_prior,
    lower_bound_spectral,
    lower_bound_thm1,
    mu1_lower_bound_degrees,
    mu1_lower_bound_prior,
    mu1_lower_bound_wiener,
    upper_bound_moment,
    upper_bound_prior,
    upper_bound_thm1,
)
from analysis.bounds import corollary1_bounds_split, f_monotone_split
from graphs import generate, parse_family

from .strategies import connected_graphs


def complete(n):
    return generate(parse_family("complete", [str(n)]))


# ---------------- f ---------------- #

@pytest.mark.parametrize("n", [1, 2, 5, 60])
def test_f_at_zero_is_n(n):
    assert f_monotone(0.0, n) == pytest.approx(n)


def test_f_examples():
    assert f_monotone(9, 6) == pytest.approx(8103.9, abs=0.05)
    assert f_monotone(3.0, 1) == pytest.approx(math.exp(3.0))
    split = f_monotone_split(278, 60)
    assert split.exponent == 278
    assert split.remainder == pytest.approx(0.53, abs=0.005)


def test_f_rejects_negative_argument():
    with pytest.raises(BoundDomainError):
        f_monotone(-1e-3, 4)


@given(
    st.floats(min_value=0.0, max_value=300.0),
    st.floats(min_value=0.0, max_value=300.0),
    st.integers(min_value=1, max_value=80),
)
def test_f_is_nondecreasing(x, y, n):
    lo, hi = sorted((x, y))
    assert f_monotone_split(lo, n).log_value <= f_monotone_split(hi, n).log_value + 1e-12


# ---------------- mu_1 estimates ---------------- #

@pytest.mark.parametrize("n", [2, 3, 7, 12])
def test_wiener_estimate_is_exact_on_complete_graphs(n):
    assert mu1_lower_bound_wiener(n * (n - 1) / 2, n - 1, n) == pytest.approx(n - 1, rel=1e-12)


def test_wiener_estimate_on_chemical_tree(tree5):
    profile = distance_profile(tree5)
    assert mu1_lower_bound_wiener(profile.wiener, profile.geo_mean, 5) == pytest.approx(7.24, abs=0.005)


@pytest.mark.parametrize("n, r", [(6, 9), (60, 278), (10, 3)])
def test_wiener_estimate_collapses_to_r_when_regular(n, r):
    assert mu1_lower_bound_wiener(n * r / 2, r, n) == pytest.approx(r, rel=1e-9)


def test_wiener_estimate_edge_cases():
    assert mu1_lower_bound_wiener(0, 0.0, 1) == 0.0
    with pytest.raises(BoundDomainError):
        mu1_lower_bound_wiener(1, 5.0, 4)


def test_mu1_estimates_ordered_on_tree(tree5):
    profile = distance_profile(tree5)
    mu1 = d_spectrum(tree5).mu1
    prior = mu1_lower_bound_prior(profile.wiener, 5)
    wiener = mu1_lower_bound_wiener(profile.wiener, profile.geo_mean, 5)
    degrees = mu1_lower_bound_degrees(profile)
    assert prior == pytest.approx(7.2)
    assert prior < wiener < degrees < mu1
    assert degrees == pytest.approx(math.sqrt((81 + 36 + 25 + 64 + 64) / 5))


# ---------------- DEE bounds ---------------- #

def test_cycle_bounds(c6):
    profile = distance_profile(c6)
    assert lower_bound_thm1(profile) == pytest.approx(8103.9, abs=0.05)
    assert upper_bound_thm1(profile) == pytest.approx(5 + math.exp(math.sqrt(162)))
    assert upper_bound_thm1(profile) == pytest.approx(337033.2, abs=0.5)
    assert lower_bound_spectral(9.0, 6) == pytest.approx(lower_bound_thm1(profile), rel=1e-12)
    assert lower_bound_prior(27, 6) == pytest.approx(lower_bound_thm1(profile), rel=1e-12)
    assert upper_bound_prior(3, 6) == pytest.approx(5 + math.exp(3 * math.sqrt(30)))
    assert upper_bound_prior(3, 6) > 337033.2


def test_chemical_tree_bounds(tree5):
    profile = distance_profile(tree5)
    lower = lower_bound_thm1(profile)
    assert lower == pytest.approx(1393.4, rel=1e-3)
    assert upper_bound_thm1(profile) == pytest.approx(32611.7, abs=0.5)
    assert lower_bound_prior(18, 5) == pytest.approx(1340, abs=1)
    assert lower_bound_prior(18, 5) < lower
    assert upper_bound_prior(3, 5) == pytest.approx(4 + math.exp(3 * math.sqrt(20)))
    assert upper_bound_prior(3, 5) > 32611.7


def test_single_vertex_bounds(k1):
    profile = distance_profile(k1)
    assert lower_bound_thm1(profile) == 1.0
    assert upper_bound_thm1(profile) == 1.0
    assert lower_bound_spectral(0.0, 1) == 1.0
    assert upper_bound_prior(0, 1) == 1.0


@pytest.mark.parametrize("n", [2, 4, 9])
def test_spectral_bound_is_exact_on_complete_graphs(n):
    expected = math.exp(n - 1) + (n - 1) * math.exp(-1)
    assert lower_bound_spectral(n - 1, n) == pytest.approx(expected, rel=1e-12)
    assert lower_bound_prior(n * (n - 1) / 2, n) == pytest.approx(expected, rel=1e-12)


def test_negative_inputs_rejected():
    with pytest.raises(BoundDomainError):
        lower_bound_spectral(-0.5, 3)
    with pytest.raises(BoundDomainError):
        upper_bound_prior(-1, 3)
    with pytest.raises(BoundDomainError):
        upper_bound_moment(-1.0, 3)


def test_moment_bound_on_cycle():
    assert upper_bound_moment(114, 6) == pytest.approx(5 + math.exp(math.sqrt(114)))


def test_corollary_bounds():
    lower, upper = corollary1_bounds(9, 3, 6)
    assert lower == pytest.approx(8103.9, abs=0.05)
    assert upper == pytest.approx(337033.2, abs=0.5)
    lower_split, upper_split = corollary1_bounds_split(278, 9, 60)
    assert lower_split.remainder == pytest.approx(0.53, abs=0.005)
    assert upper_split.exponent == pytest.approx(math.sqrt(150120))
    assert upper_split.exponent == pytest.approx(387.45, abs=0.01)
    assert upper_split.remainder == 59


# ---------------- SplitExp ---------------- #

def test_split_exp_in_range():
    value = SplitExp(2.0, 1.0)
    assert not value.overflow
    assert value.value == pytest.approx(2 + math.e)
    assert value.log_value == pytest.approx(math.log(2 + math.e))
    assert value.text(4) == "4.718"


def test_split_exp_overflow():
    value = SplitExp(0.53, 1000.0)
    assert value.overflow
    assert math.isinf(value.value)
    assert value.log_value == pytest.approx(1000.0)
    assert value.text(6) == "0.53 + e^1000"


# ---------------- reports ---------------- #

@pytest.mark.parametrize("n", [2, 3, 6, 12])
def test_complete_graph_reaches_lower_bound(n):
    report = bounds_report(complete(n))
    assert report.equality_lower
    assert not report.equality_upper
    assert report.violations() == []
    assert report.corollary1 is not None


def test_single_vertex_reaches_both_bounds(k1):
    report = bounds_report(k1)
    assert report.equality_lower
    assert report.equality_upper
    assert report.violations() == []


def test_tree_report(tree5):
    report = bounds_report(tree5)
    assert not report.equality_lower
    assert not report.equality_upper
    assert report.corollary1 is None
    assert report.dee_exact.value == pytest.approx(1737.016, abs=0.005)
    assert report.violations() == []


def test_regular_graph_pair_matches_wiener_bounds(c6):
    report = bounds_report(c6)
    lower, upper = report.corollary1
    assert lower.value == pytest.approx(report.lower_thm1.value, rel=1e-12)
    assert upper.value == pytest.approx(report.upper_thm1.value, rel=1e-12)
    assert report.violations() == []


def test_violations_detects_broken_chain(tree5):
    report = bounds_report(tree5)
    broken = dataclasses.replace(report, lower_thm1=SplitExp(0.0, 50.0))
    problems = broken.violations()
    assert any(p.startswith("lower_thm1") for p in problems)


@given(connected_graphs(max_n=8))
def test_chain_holds_on_random_graphs(g):
    report = bounds_report(g)
    assert report.violations() == []
    exact = dee(d_spectrum(g))
    assert report.dee_exact.value == pytest.approx(exact.value, rel=1e-12)
