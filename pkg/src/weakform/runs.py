"""Wald-Wolfowitz runs test on changes classified above/below their mean."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from typing import Mapping, Sequence

from .distributions import PValue, two_sided_normal_p
from .errors import DegenerateSeriesError, InvalidInputError
from .series import SeriesLike, as_array

MIN_NORMAL_N = 20


class Sign(IntEnum):
    DOWN = 0
    UP = 1


@dataclass(frozen=True)
class RunsResult:
    label: str
    N: int
    counts: tuple[int, int]
    nruns: int
    expected_runs: float
    variance: float
    z: float
    p: PValue
    ties_excluded: int = 0
    small_sample: bool = False


def classify_relative_to_mean(values: SeriesLike) -> tuple[list[Sign], int]:
    """Map each change to UP / DOWN relative to the series mean.

    Returns the sign sequence and the number of values exactly equal to
    the mean, which are dropped.
    """
    y = as_array(values)
    if y.size < 2:
        raise InvalidInputError("need at least 2 changes to classify")
    ybar = y.mean()
    signs = [Sign.UP if v > ybar else Sign.DOWN for v in y if v != ybar]
    return signs, int(y.size - len(signs))


def count_runs(signs: Sequence[int]) -> tuple[int, dict[int, int]]:
    """Number of maximal same-category blocks, and the count per category."""
    if len(signs) == 0:
        raise DegenerateSeriesError("no classified observations to count runs in")
    nruns = 1 + sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    counts = Counter(int(s) for s in signs)
    return nruns, dict(sorted(counts.items()))


def expected_runs(counts: Sequence[int] | Mapping[int, int], N: int | None = None) -> float:
    """Expected number of runs under random arrangement.

    ``(N * (N + 1) - sum(n_i**2)) / N``, valid for any number of categories;
    with two categories this reduces to ``1 + 2 * n0 * n1 / N``.
    """
    ns = list(counts.values()) if isinstance(counts, Mapping) else list(counts)
    total = sum(ns)
    if N is None:
        N = total
    if N != total:
        raise InvalidInputError(f"category counts sum to {total}, not N={N}")
    if N <= 0:
        raise DegenerateSeriesError("expected runs of an empty sequence")
    return (N * (N + 1) - sum(n * n for n in ns)) / N


def runs_variance(n0: int, n1: int) -> float:
    """Variance of the run count for two categories under random arrangement."""
    N = n0 + n1
    if N < 2:
        raise DegenerateSeriesError("runs variance needs N >= 2")
    prod = 2 * n0 * n1
    return prod * (prod - N) / (N * N * (N - 1))


def runs_z(nruns: int, n0: int, n1: int) -> tuple[float, float, float]:
    """Continuity-corrected z for an observed run count.

    Returns ``(z, expected, variance)``. The 0.5 correction moves the
    observed count toward its expectation and never past it.
    """
    if n0 <= 0 or n1 <= 0:
        raise DegenerateSeriesError("runs test needs both categories present")
    mu = expected_runs((n0, n1))
    var = runs_variance(n0, n1)
    if var <= 0:
        raise DegenerateSeriesError("runs variance is zero")
    diff = nruns - mu
    corrected = math.copysign(max(abs(diff) - 0.5, 0.0), diff)
    return corrected / math.sqrt(var), mu, var


def runs_test_from_counts(n0: int, n1: int, nruns: int, label: str = "",
                          ties_excluded: int = 0) -> RunsResult:
    N = n0 + n1
    if not 1 <= nruns <= N:
        raise InvalidInputError(f"nruns={nruns} impossible for N={N}")
    z, mu, var = runs_z(nruns, n0, n1)
    p = PValue(min(1.0, two_sided_normal_p(z)), "two", "normal-asymptotic")
    return RunsResult(label, N, (n0, n1), nruns, mu, var, z, p,
                      ties_excluded, N < MIN_NORMAL_N)


def runs_test(values: SeriesLike, label: str | None = None) -> RunsResult:
    """Runs test of changes relative to their mean.

    >>> r = runs_test([1.0, -1.0] * 15)
    >>> (r.N, r.nruns)
    (30, 30)
    """
    if label is None:
        label = getattr(values, "label", "")
    signs, ties = classify_relative_to_mean(values)
    if len(signs) < 2:
        raise DegenerateSeriesError("fewer than 2 changes differ from the mean")
    nruns, counts = count_runs(signs)
    return runs_test_from_counts(counts.get(Sign.DOWN, 0), counts.get(Sign.UP, 0),
                                 nruns, label, ties)

