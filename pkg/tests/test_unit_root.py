import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from weakform import (InvalidInputError, SingularDesignError, adf, adf_pvalue, critical_values,
                      ols)
from weakform.unit_root import _DF_TABLE


def normal_equations(X, y):
    X = np.asarray(X, float)
    y = np.asarray(y, float)
    XtX = X.T @ X
    beta = np.linalg.solve(XtX, X.T @ y)
    resid = y - X @ beta
    s2 = resid @ resid / (X.shape[0] - X.shape[1])
    se = np.sqrt(np.diag(s2 * np.linalg.inv(XtX)))
    return beta, se


NOISY_X = np.column_stack([np.ones(12), np.arange(12.0), np.sin(np.arange(12.0))])
NOISY_Y = np.array([1.3, 2.9, 5.2, 6.8, 9.4, 10.7, 13.1, 15.3, 16.8, 19.4, 20.6, 23.2])


def test_ols_exact_fit():
    fit = ols([[1, 0], [1, 1], [1, 2]], [1, 3, 5])
    assert fit.coefficients == pytest.approx([1, 2], abs=1e-12)
    assert np.allclose(fit.residuals, 0, atol=1e-12)
    assert fit.dof == 1 and fit.nobs == 3


def test_ols_against_normal_equations():
    fit = ols(NOISY_X, NOISY_Y)
    beta, se = normal_equations(NOISY_X, NOISY_Y)
    assert fit.coefficients == pytest.approx(beta, abs=1e-8)
    assert fit.standard_errors == pytest.approx(se, abs=1e-8)
    assert fit.t_stats == pytest.approx(fit.coefficients / fit.standard_errors, rel=1e-15)
    assert np.abs(NOISY_X.T @ fit.residuals).max() <= 1e-8 * np.abs(NOISY_Y).max()
    assert NOISY_X @ fit.coefficients + fit.residuals == pytest.approx(NOISY_Y, abs=1e-10)


def test_ols_errors():
    with pytest.raises(SingularDesignError):
        ols([[1, 2], [2, 4], [3, 6]], [1, 2, 3])
    with pytest.raises(InvalidInputError):
        ols([[1, 0], [1, 1]], [1, 2])
    with pytest.raises(InvalidInputError):
        ols([[1, 0], [1, 1], [1, 2]], [1, 2])


def adf_oracle(y, lags):
    """ADF t-ratio by building the regression row by row and using normal equations."""
    rows, resp = [], []
    for t in range(lags + 1, len(y)):
        row = [1.0, y[t - 1]]
        for j in range(1, lags + 1):
            row.append(y[t - j] - y[t - j - 1])
        rows.append(row)
        resp.append(y[t] - y[t - 1])
    beta, se = normal_equations(rows, resp)
    return beta[1] / se[1], len(resp)


FIFTEEN = [0.4, -1.1, 0.9, 2.2, 1.5, -0.3, 0.8, 1.9, -0.6, 0.1, 1.4, -1.8, 0.7, 0.2, 1.1]


@pytest.mark.parametrize("lags", [0, 1, 2])
def test_adf_against_oracle(lags):
    stat, nobs = adf_oracle(FIFTEEN, lags)
    res = adf(FIFTEEN, lags)
    assert res.statistic == pytest.approx(stat, abs=1e-8)
    assert res.nobs_included == nobs == len(FIFTEEN) - 1 - lags


def test_adf_included_observations():
    y = np.random.default_rng(1).standard_normal(118)
    res = adf(y, lags=1)
    assert res.nobs_included == 116 and res.lags == 1 and res.deterministic == "constant"
    assert list(res.critical_values) == ["1%", "5%", "10%"]


def test_adf_trend_variant():
    y = np.cumsum(np.random.default_rng(2).standard_normal(200))
    res = adf(y, 1, "constant_trend")
    assert res.critical_values["5%"] < -3.4


def test_adf_errors():
    with pytest.raises(SingularDesignError):
        adf([5.0] * 30)
    with pytest.raises(InvalidInputError):
        adf(np.arange(10.0), lags=1)
    with pytest.raises(InvalidInputError):
        adf(np.random.default_rng(0).standard_normal(40), deterministic="trend")


def test_critical_values_increasing():
    for det in ("constant", "constant_trend"):
        for n in (20, 25, 60, 116, 300, 1000, 10**6):
            cv = list(critical_values(det, n).values())
            assert cv[0] < cv[1] < cv[2]


def test_critical_values_at_anchor_rows():
    assert critical_values("constant", 100)["5%"] == pytest.approx(-2.89)
    assert critical_values("constant_trend", 250)["1%"] == pytest.approx(-3.99)


def test_pvalue_anchor_and_clamps():
    cv5 = critical_values("constant", 100)["5%"]
    p = adf_pvalue(cv5, "constant", 100)
    assert p.value == pytest.approx(0.05, abs=1e-12) and p.bound == "interpolated"
    p = adf_pvalue(-12.0, "constant", 100)
    assert p.value == 0.01 and p.bound == "below_table"
    p = adf_pvalue(0.5, "constant", 100)
    assert p.value == 0.10 and p.bound == "above_table"
    assert adf_pvalue(-6.742, "constant", 115).bound == "below_table"
    with pytest.raises(InvalidInputError):
        adf_pvalue(-2.0, "constant", 10)


def test_table_rows_monotone_in_n():
    for det, table in _DF_TABLE.items():
        sizes = [25, 50, 100, 250, 500, None]
        for level in range(3):
            col = [table[s][level] for s in sizes]
            assert all(b >= a for a, b in zip(col, col[1:])), (det, level)


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1), st.floats(0.01, 1000), st.floats(-1e3, 1e3))
def test_adf_scale_and_shift_invariant(seed, c, b):
    y = np.cumsum(np.random.default_rng(seed).standard_normal(60))
    base = adf(y).statistic
    assert adf(c * y).statistic == pytest.approx(base, rel=1e-7, abs=1e-7)
    assert adf(y + b).statistic == pytest.approx(base, rel=1e-6, abs=1e-6)


@pytest.mark.slow
def test_adf_size_on_random_walks():
    from weakform import SimSpec, simulate

    rej = sum(adf(simulate(SimSpec(length=118, seed=seed, start_price=1e4)).closes).rejects_5pct
              for seed in range(1000))
    assert abs(rej / 1000 - 0.05) <= 0.02
