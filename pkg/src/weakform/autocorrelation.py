"""Lag-k autocorrelation of a change series with normal-approximation t-tests."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import Z_CRIT_5PCT
from .errors import DegenerateSeriesError, InvalidInputError
from .series import SeriesLike, as_array

SE_MODES = ("exact", "large_n", "auto")
LARGE_N = 50


def _deviations(y: np.ndarray) -> tuple[np.ndarray, float]:
    d = y - y.mean()
    denom = float(d @ d)
    scale = float(np.max(np.abs(y))) if y.size else 0.0
    if denom <= y.size * (1e-14 * scale) ** 2:
        raise DegenerateSeriesError("autocorrelation of a zero-variance series")
    return d, denom


def acf(values: SeriesLike, k: int) -> float:
    """Autocorrelation at lag ``k`` about the overall mean.

    The numerator sums ``(y[t] - ybar) * (y[t-k] - ybar)`` over the
    ``n - k`` overlapping pairs; the denominator is the full sum of squared
    deviations, so the estimate is bounded by 1 in magnitude. ``k = 0``
    returns 1.
    """
    y = as_array(values)
    n = y.size
    if not 0 <= k <= n - 2:
        raise InvalidInputError(f"lag {k} outside [0, {n - 2}] for n={n}")
    d, denom = _deviations(y)
    if k == 0:
        return 1.0
    return float(d[k:] @ d[:-k]) / denom


def acf_se(n: int, k: int, mode: str = "auto") -> float:
    """Standard error of ACF(k) under the independence null.

    ``exact`` is ``1/sqrt(n - k)``, ``large_n`` is ``1/sqrt(n)``, ``auto``
    picks ``large_n`` once ``n >= 50``.
    """
    if mode not in SE_MODES:
        raise InvalidInputError(f"unknown se mode {mode!r}")
    if k < 1 or n <= k:
        raise InvalidInputError(f"need n > k >= 1, got n={n}, k={k}")
    if mode == "auto":
        mode = "large_n" if n >= LARGE_N else "exact"
    return 1.0 / math.sqrt(n if mode == "large_n" else n - k)


def acf_t(acf_value: float, se: float) -> tuple[float, bool]:
    """Return ``(t, significant)`` with significance at ``|t| > 1.96``."""
    if not se > 0:
        raise InvalidInputError(f"standard error must be positive, got {se}")
    t = acf_value / se
    return t, abs(t) > Z_CRIT_5PCT


@dataclass(frozen=True)
class AcfRow:
    k: int
    acf: float
    se: float
    t: float
    significant_5pct: bool
    exceeds_two_se: bool


@dataclass(frozen=True)
class AcfResult:
    label: str
    rows: tuple[AcfRow, ...]
    summary_sd: float
    summary_se: float
    n: int
    se_mode: str = "auto"

    @property
    def n_significant(self) -> int:
        return sum(r.significant_5pct for r in self.rows)


def summarize_acf_column(values: SeriesLike) -> tuple[float, float]:
    """Sample SD (n-1 divisor) of a column of ACF values and its SD / sqrt(m)."""
    x = as_array(values)
    if x.size < 2:
        raise InvalidInputError("need at least 2 ACF values to summarise")
    sd = float(x.std(ddof=1))
    return sd, sd / math.sqrt(x.size)


def acf_table(values: SeriesLike, max_lag: int = 20, se_mode: str = "auto",
              label: str | None = None) -> AcfResult:
    """ACF, standard error and t-ratio for lags ``1..max_lag``.

    Parameters
    ----------
    values : ChangeSeries or array_like
        The change series.
    max_lag : int
        Number of lags tabulated (20 by default).
    se_mode : {"auto", "exact", "large_n"}
        Passed to :func:`acf_se`.
    label : str, optional
        Defaults to the ChangeSeries label.

    Returns
    -------
    AcfResult
        Per-lag rows and the column summary (sample SD of the ACF values
        and that SD divided by ``sqrt(max_lag)``).
    """
    if label is None:
        label = getattr(values, "label", "")
    y = as_array(values)
    n = y.size
    if max_lag < 1:
        raise InvalidInputError("max_lag must be >= 1")
    if n < max_lag + 2:
        raise InvalidInputError(f"series of length {n} too short for {max_lag} lags")
    d, denom = _deviations(y)
    rows = []
    for k in range(1, max_lag + 1):
        r = float(d[k:] @ d[:-k]) / denom
        se = acf_se(n, k, se_mode)
        t, sig = acf_t(r, se)
        rows.append(AcfRow(k, r, se, t, sig, abs(r) > 2 * se))
    sd, se_sum = summarize_acf_column([row.acf for row in rows]) if max_lag >= 2 else (0.0, 0.0)
    return AcfResult(label, tuple(rows), sd, se_sum, n, se_mode)
