"""Price and change series plus the descriptive statistics the tests share."""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence, Union

import numpy as np

from .errors import DegenerateSeriesError, InvalidInputError

ChangeMode = Literal["arithmetic_diff", "log_return"]
CHANGE_MODES: tuple[str, ...] = ("arithmetic_diff", "log_return")


def month_of(value: Union[dt.date, str]) -> dt.date:
    """Normalise a date or an ISO ``YYYY-MM[-DD]`` string to the first of its month."""
    if isinstance(value, str):
        text = value.strip()
        parts = text.split("-")
        if len(parts) not in (2, 3):
            raise InvalidInputError(f"not an ISO year-month or date: {value!r}")
        try:
            year, month = int(parts[0]), int(parts[1])
            if len(parts) == 3:
                dt.date(year, month, int(parts[2]))
            return dt.date(year, month, 1)
        except ValueError as exc:
            raise InvalidInputError(f"not an ISO year-month or date: {value!r}") from exc
    return dt.date(value.year, value.month, 1)


def month_index(month: dt.date) -> int:
    return month.year * 12 + (month.month - 1)


def add_months(month: dt.date, count: int) -> dt.date:
    idx = month_index(month) + count
    return dt.date(idx // 12, idx % 12 + 1, 1)


@dataclass(frozen=True)
class PriceSeries:
    """Ordered monthly closes for one index.

    ``notes`` carries data-quality remarks that travel with the series
    (simulator seed substitutions, ingestion remarks). Missing months are
    allowed and reported through :attr:`gaps`.
    """

    label: str
    dates: tuple[dt.date, ...]
    closes: tuple[float, ...]
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        dates = tuple(month_of(d) for d in self.dates)
        closes = tuple(float(c) for c in self.closes)
        object.__setattr__(self, "dates", dates)
        object.__setattr__(self, "closes", closes)
        object.__setattr__(self, "notes", tuple(self.notes))
        if len(dates) != len(closes):
            raise InvalidInputError("dates and closes differ in length")
        if len(closes) < 3:
            raise InvalidInputError(
                f"{self.label}: need at least 3 closes, got {len(closes)}"
            )
        for i in range(1, len(dates)):
            if month_index(dates[i]) <= month_index(dates[i - 1]):
                raise InvalidInputError(
                    f"{self.label}: dates not strictly increasing at position {i}"
                )
        for i, c in enumerate(closes):
            if not (math.isfinite(c) and c > 0):
                raise InvalidInputError(f"{self.label}: non-positive close {c} at position {i}")

    def __len__(self) -> int:
        return len(self.closes)

    @property
    def gaps(self) -> int:
        """Number of calendar months missing between the first and last date."""
        span = month_index(self.dates[-1]) - month_index(self.dates[0]) + 1
        return span - len(self.dates)


@dataclass(frozen=True)
class ChangeSeries:
    label: str
    values: tuple[float, ...]
    mode: str = "arithmetic_diff"

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if self.mode not in CHANGE_MODES:
            raise InvalidInputError(f"unknown change mode {self.mode!r}")
        if not all(math.isfinite(v) for v in values):
            raise InvalidInputError(f"{self.label}: non-finite change value")

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


SeriesLike = Union[ChangeSeries, Sequence[float], np.ndarray]


def as_array(values: SeriesLike) -> np.ndarray:
    """Return the values of a ChangeSeries or plain sequence as a float array."""
    if isinstance(values, ChangeSeries):
        return values.as_array()
    return np.asarray(values, dtype=float).ravel()


def changes(series: PriceSeries, mode: str = "arithmetic_diff") -> ChangeSeries:
    """Month-to-month changes of a price series.

    ``arithmetic_diff`` gives ``p[t] - p[t-1]``; ``log_return`` gives
    ``log(p[t] / p[t-1])``.
    """
    if len(series) < 3:
        raise InvalidInputError("need at least 3 prices to form changes")
    p = np.asarray(series.closes, dtype=float)
    if mode == "arithmetic_diff":
        y = np.diff(p)
    elif mode == "log_return":
        y = np.log(p[1:] / p[:-1])
    else:
        raise InvalidInputError(f"unknown change mode {mode!r}")
    return ChangeSeries(series.label, tuple(y.tolist()), mode)


def mean(values: SeriesLike) -> float:
    x = as_array(values)
    if x.size == 0:
        raise InvalidInputError("mean of empty input")
    return float(x.mean())


def sample_std(values: SeriesLike) -> float:
    """Standard deviation with the ``n - 1`` divisor."""
    x = as_array(values)
    if x.size < 2:
        raise InvalidInputError("sample_std needs at least 2 values")
    return float(x.std(ddof=1))


def _central_moments(values: SeriesLike) -> tuple[float, float, float]:
    x = as_array(values)
    if x.size < 3:
        raise InvalidInputError("moments need at least 3 values")
    d = x - x.mean()
    m2 = float(np.mean(d**2))
    # relative tolerance: rounding in the mean leaves ~eps-sized residues
    scale = float(np.max(np.abs(x))) if x.size else 0.0
    if m2 <= (1e-14 * scale) ** 2:
        raise DegenerateSeriesError("series has zero variance")
    return m2, float(np.mean(d**3)), float(np.mean(d**4))


def skewness(values: SeriesLike) -> float:
    """Population skewness ``m3 / m2**1.5`` (divisor n)."""
    m2, m3, _ = _central_moments(values)
    return m3 / m2**1.5


def kurtosis(values: SeriesLike) -> float:
    """Population (non-excess) kurtosis ``m4 / m2**2``; equals 3 for a normal."""
    m2, _, m4 = _central_moments(values)
    return m4 / m2**2


def cumulative(start: float, increments: Iterable[float]) -> list[float]:
    out = [float(start)]
    for inc in increments:
        out.append(out[-1] + inc)
    return out
