from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from weakform import (DegenerateSeriesError, InvalidInputError, classify_relative_to_mean,
                      count_runs, expected_runs, runs_test, runs_test_from_counts, runs_variance)
from weakform.runs import Sign

from bse_tables import RUNS

U, D = Sign.UP, Sign.DOWN


def exact_run_moments(n0, n1):
    """Mean and variance of the run count over every arrangement, in exact fractions."""
    N = n0 + n1
    total = total_sq = count = 0
    for ones in combinations(range(N), n1):
        seq = [0] * N
        for i in ones:
            seq[i] = 1
        r = 1 + sum(seq[i] != seq[i + 1] for i in range(N - 1))
        total += r
        total_sq += r * r
        count += 1
    m = Fraction(total, count)
    return m, Fraction(total_sq, count) - m * m


def test_classify():
    assert classify_relative_to_mean([1, 3]) == ([D, U], 0)
    assert classify_relative_to_mean([0, 0, 4]) == ([D, D, U], 0)
    assert classify_relative_to_mean([1, 1, 1]) == ([], 3)
    assert classify_relative_to_mean([1, 2, 3]) == ([D, U], 1)


def test_constant_is_degenerate():
    with pytest.raises(DegenerateSeriesError):
        runs_test([1.0, 1.0, 1.0])


def test_count_runs():
    assert count_runs([U, U, D, U]) == (3, {0: 1, 1: 3})
    assert count_runs([U, D, U, D])[0] == 4
    assert count_runs([U, U, U]) == (1, {1: 3})
    with pytest.raises(DegenerateSeriesError):
        count_runs([])


def test_expected_runs():
    assert expected_runs((59, 59), 118) == 60
    assert expected_runs((2, 2), 4) == 3
    assert expected_runs((7,), 7) == 1
    assert expected_runs({0: 3, 1: 4, 2: 5}) == pytest.approx((12 * 13 - 50) / 12)
    with pytest.raises(DegenerateSeriesError):
        expected_runs((0, 0))
    with pytest.raises(InvalidInputError):
        expected_runs((3, 4), 8)


@pytest.mark.parametrize("index", sorted(RUNS))
def test_reported_rows(index):
    N, n0, n1, nruns, z, p = RUNS[index]
    res = runs_test_from_counts(n0, n1, nruns)
    assert res.N == N
    assert res.z == pytest.approx(z, abs=5e-4)
    assert res.p.value == pytest.approx(p, abs=1e-3)
    assert res.p.sided == "two"


def test_continuity_correction_never_overshoots():
    # 30 observations, nruns equal to the rounded expectation
    res = runs_test_from_counts(15, 15, 16)
    assert res.expected_runs == 16 and res.z == 0.0 and res.p.value == 1.0
    assert runs_test_from_counts(15, 16, 16).z == 0.0


def test_one_category_is_degenerate():
    with pytest.raises(DegenerateSeriesError):
        runs_test_from_counts(0, 10, 1)
    with pytest.raises(InvalidInputError):
        runs_test_from_counts(5, 5, 11)


def test_runs_test_on_series():
    y = [1.0, -1.0] * 15
    res = runs_test(y)
    assert (res.N, res.counts, res.nruns) == (30, (15, 15), 30)
    assert res.z > 0 and res.p.value < 1e-4
    assert not res.small_sample
    assert runs_test([1.0, -2.0, 3.0, 0.5, -1.0]).small_sample


@pytest.mark.parametrize("n0,n1", [(a, b) for a in range(1, 10) for b in range(1, 10) if a + b <= 10])
def test_moments_match_enumeration(n0, n1):
    m, v = exact_run_moments(n0, n1)
    assert expected_runs((n0, n1)) == pytest.approx(float(m), abs=1e-12)
    assert runs_variance(n0, n1) == pytest.approx(float(v), abs=1e-12)


@given(st.lists(st.floats(-50, 50, allow_nan=False), min_size=4, max_size=60),
       st.floats(0.01, 1000))
def test_scale_invariant(xs, c):
    y = np.asarray(xs)
    signs, _ = classify_relative_to_mean(y)
    assume(len(set(signs)) == 2 and len(signs) >= 3)
    # scaling can move a value across an exactly-equal-to-mean boundary only through rounding
    assume(np.all(np.abs(y - y.mean()) > 1e-9 * max(1.0, np.abs(y).max())))
    assert runs_test(c * y) == runs_test(y)


@given(st.integers(1, 80), st.integers(1, 80), st.data())
def test_label_swap_leaves_z_unchanged(n0, n1, data):
    assume(n0 + n1 >= 3)
    nruns = data.draw(st.integers(1, n0 + n1))
    assert runs_test_from_counts(n0, n1, nruns).z == runs_test_from_counts(n1, n0, nruns).z


@given(st.integers(2, 60), st.integers(2, 60))
def test_two_category_closed_form(n0, n1):
    N = n0 + n1
    assert expected_runs((n0, n1), N) == pytest.approx(1 + 2 * n0 * n1 / N, rel=1e-14)
