"""Kolmogorov-Smirnov and Jarque-Bera tests of normality."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import PValue, chi2_df2_sf, kolmogorov_sf, std_normal_cdf
from .errors import DegenerateSeriesError, InvalidInputError
from .series import SeriesLike, as_array, kurtosis, sample_std, skewness

KS_MODES = ("standardized", "raw_standard_normal")


@dataclass(frozen=True)
class NormalityResult:
    label: str
    ks_d: float
    ks_p: PValue
    ks_mode: str
    jb: float
    jb_p: PValue
    skewness: float
    kurtosis: float
    n: int


def ks_statistic(x: np.ndarray) -> float:
    """Two-sided sup gap between the empirical CDF of ``x`` and Phi.

    At each sorted point both the right limit ``i/n`` and the left limit
    ``(i-1)/n`` of the empirical CDF are compared; with ties the largest
    gap still lands on one of these.
    """
    xs = np.sort(x)
    n = xs.size
    cdf = np.array([std_normal_cdf(v) for v in xs])
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - cdf)
    d_minus = np.max(cdf - (i - 1) / n)
    return float(max(d_plus, d_minus))


def ks_test(values: SeriesLike, mode: str = "standardized") -> tuple[float, PValue]:
    """KS distance to the standard normal with an asymptotic p-value.

    ``standardized`` first maps ``x -> (x - mean) / sample_std``;
    ``raw_standard_normal`` compares the values as they are. No
    correction is made for estimated parameters.
    """
    if mode not in KS_MODES:
        raise InvalidInputError(f"unknown KS mode {mode!r}")
    x = as_array(values)
    n = x.size
    if n < 5:
        raise InvalidInputError(f"KS test needs n >= 5, got {n}")
    if mode == "standardized":
        sd = sample_std(x)
        scale = float(np.max(np.abs(x)))
        if sd <= 1e-14 * scale:
            raise DegenerateSeriesError("cannot standardise a zero-variance series")
        x = (x - x.mean()) / sd
    d = ks_statistic(x)
    return d, PValue(kolmogorov_sf(math.sqrt(n) * d), "one", "kolmogorov-asymptotic")


def jarque_bera(values: SeriesLike) -> tuple[float, PValue, float, float]:
    """Jarque-Bera statistic ``n/6 * (S**2 + (K - 3)**2 / 4)`` with chi2(2) p.

    Returns ``(jb, p, skewness, kurtosis)``.
    """
    x = as_array(values)
    n = x.size
    if n < 8:
        raise InvalidInputError(f"Jarque-Bera needs n >= 8, got {n}")
    s = skewness(x)
    k = kurtosis(x)
    jb = n / 6.0 * (s * s + (k - 3.0) ** 2 / 4.0)
    return jb, PValue(chi2_df2_sf(jb), "one", "chi2-df2"), s, k


def normality(values: SeriesLike, ks_mode: str = "standardized",
              label: str | None = None) -> NormalityResult:
    if label is None:
        label = getattr(values, "label", "")
    x = as_array(values)
    d, ks_p = ks_test(x, ks_mode)
    jb, jb_p, s, k = jarque_bera(x)
    return NormalityResult(label, d, ks_p, ks_mode, jb, jb_p, s, k, int(x.size))
