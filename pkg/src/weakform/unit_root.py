"""Augmented Dickey-Fuller test on a QR-based least-squares core.

Critical values are the Dickey-Fuller percentiles for the t-ratio on the
lagged level as tabulated by Fuller (1976, Table 8.5.2) and reproduced in
Hamilton (1994, Table B.6), cases "constant" and "constant + trend".
p-values are interpolated linearly between the 1%, 5% and 10% points; the
critical values themselves are interpolated in ``1/n`` between sample-size
rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .distributions import PValue
from .errors import InvalidInputError, SingularDesignError
from .series import SeriesLike, as_array

DETERMINISTIC = ("constant", "constant_trend")
LEVELS = (0.01, 0.05, 0.10)
RANK_TOL = 1e-10

# sample size -> (1%, 5%, 10%) critical values; None is the asymptotic row
_DF_TABLE: dict[str, dict[int | None, tuple[float, float, float]]] = {
    "constant": {
        25: (-3.75, -3.00, -2.63),
        50: (-3.58, -2.93, -2.60),
        100: (-3.51, -2.89, -2.58),
        250: (-3.46, -2.88, -2.57),
        500: (-3.44, -2.87, -2.57),
        None: (-3.43, -2.86, -2.57),
    },
    "constant_trend": {
        25: (-4.38, -3.60, -3.24),
        50: (-4.15, -3.50, -3.18),
        100: (-4.04, -3.45, -3.15),
        250: (-3.99, -3.43, -3.13),
        500: (-3.98, -3.42, -3.13),
        None: (-3.96, -3.41, -3.12),
    },
}


@dataclass(frozen=True)
class OlsFit:
    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_stats: np.ndarray
    residuals: np.ndarray
    nobs: int
    dof: int

    @property
    def rss(self) -> float:
        return float(self.residuals @ self.residuals)


def ols(design, response) -> OlsFit:
    """Least squares via a thin QR decomposition.

    Standard errors use ``s**2 * inv(X'X)`` with ``s**2 = RSS / dof``;
    ``inv(X'X)`` is formed as ``inv(R) @ inv(R).T`` so the normal equations
    are never built.
    """
    X = np.asarray(design, dtype=float)
    y = np.asarray(response, dtype=float).ravel()
    if X.ndim == 1:
        X = X[:, None]
    n, k = X.shape
    if y.size != n:
        raise InvalidInputError(f"design has {n} rows but response has {y.size}")
    if n < k + 1:
        raise InvalidInputError(f"need at least {k + 1} rows for {k} regressors, got {n}")
    Q, R = np.linalg.qr(X, mode="reduced")
    diag = np.abs(np.diag(R))
    if k and diag.min() <= RANK_TOL * max(diag.max(), np.finfo(float).tiny):
        raise SingularDesignError("design matrix is rank deficient")
    beta = np.linalg.solve(R, Q.T @ y)  # R is triangular; solve is fine at this size
    resid = y - X @ beta
    dof = n - k
    s2 = float(resid @ resid) / dof
    R_inv = np.linalg.solve(R, np.eye(k))
    cov_diag = np.einsum("ij,ij->i", R_inv, R_inv)
    se = np.sqrt(s2 * cov_diag)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = beta / se
    return OlsFit(beta, se, t, resid, n, dof)


def _check_deterministic(deterministic: str) -> None:
    if deterministic not in DETERMINISTIC:
        raise InvalidInputError(f"deterministic must be one of {DETERMINISTIC}, got {deterministic!r}")


def critical_values(deterministic: str, nobs: int) -> dict[str, float]:
    """1%/5%/10% critical values for ``nobs``, interpolated in ``1/n``."""
    _check_deterministic(deterministic)
    table = _DF_TABLE[deterministic]
    sizes = sorted(s for s in table if s is not None)
    if nobs <= sizes[0]:
        cv = table[sizes[0]]
    else:
        knots = [(1.0 / s, table[s]) for s in sizes] + [(0.0, table[None])]
        x = 1.0 / nobs
        cv = table[None]
        for (x_hi, c_hi), (x_lo, c_lo) in zip(knots, knots[1:]):
            if x_lo <= x <= x_hi:
                w = (x - x_lo) / (x_hi - x_lo)
                cv = tuple(lo + w * (hi - lo) for lo, hi in zip(c_lo, c_hi))
                break
    return {"1%": cv[0], "5%": cv[1], "10%": cv[2]}


def adf_pvalue(statistic: float, deterministic: str = "constant", nobs: int = 100) -> PValue:
    """Left-tail p-value by interpolating between tabulated critical values.

    Outside the tabulated range the boundary level is returned and the
    ``bound`` flag says which side was clamped.
    """
    if nobs < 20:
        raise InvalidInputError(f"ADF p-value needs nobs >= 20, got {nobs}")
    cv = list(critical_values(deterministic, nobs).values())
    method = "df-table-interpolation"
    if statistic < cv[0]:
        return PValue(LEVELS[0], "one", method, "below_table")
    if statistic > cv[-1]:
        return PValue(LEVELS[-1], "one", method, "above_table")
    p = float(np.interp(statistic, cv, LEVELS))
    return PValue(p, "one", method, "interpolated")


@dataclass(frozen=True)
class AdfResult:
    label: str
    statistic: float
    p_value: PValue
    lags: int
    nobs_included: int
    deterministic: str
    critical_values: Mapping[str, float]

    @property
    def rejects_5pct(self) -> bool:
        return self.statistic < self.critical_values["5%"]


def adf_design(y: np.ndarray, lags: int, deterministic: str) -> tuple[np.ndarray, np.ndarray, int]:
    """Build ``(X, dy, level_column)`` for the ADF regression.

    Rows are ``t = lags+1 .. len(y)-1`` (0-based); columns are the
    deterministic terms, then ``y[t-1]``, then ``dy[t-1] .. dy[t-lags]``.
    """
    dy = np.diff(y)
    rows = np.arange(lags, dy.size)
    cols = [np.ones(rows.size)]
    if deterministic == "constant_trend":
        cols.append((rows + 1).astype(float))
    level_col = len(cols)
    cols.append(y[rows])
    for j in range(1, lags + 1):
        cols.append(dy[rows - j])
    return np.column_stack(cols), dy[rows], level_col


def adf(values: SeriesLike, lags: int = 1, deterministic: str = "constant",
        label: str | None = None) -> AdfResult:
    """Augmented Dickey-Fuller test of a unit root in ``values``.

    Regresses ``dy[t]`` on the deterministic terms, ``y[t-1]`` and ``lags``
    lagged differences; the statistic is the t-ratio on ``y[t-1]``. A
    statistic below the 5% critical value rejects the unit root.

    Examples
    --------
    >>> import numpy as np
    >>> y = np.random.default_rng(0).standard_normal(118)
    >>> res = adf(y)
    >>> res.nobs_included, res.rejects_5pct
    (116, True)
    """
    if label is None:
        label = getattr(values, "label", "")
    _check_deterministic(deterministic)
    if lags < 0:
        raise InvalidInputError("lags must be >= 0")
    y = as_array(values)
    if y.size < lags + 10:
        raise InvalidInputError(f"series of length {y.size} too short for {lags} lags")
    X, dy, level_col = adf_design(y, lags, deterministic)
    fit = ols(X, dy)
    stat = float(fit.t_stats[level_col])
    if not math.isfinite(stat):
        raise SingularDesignError("lagged level coefficient has zero standard error")
    nobs = dy.size
    return AdfResult(
        label=label,
        statistic=stat,
        p_value=adf_pvalue(stat, deterministic, max(nobs, 20)),
        lags=lags,
        nobs_included=nobs,
        deterministic=deterministic,
        critical_values=critical_values(deterministic, nobs),
    )
