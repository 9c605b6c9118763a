"""Seeded synthetic monthly price series.

Innovations are standard normals from numpy's ``Generator(PCG64(seed))``
using its ziggurat sampler (``standard_normal``). Output is bit-identical
for a given spec on a given numpy version.

Models
------
random_walk
    ``p[t] = p[t-1] + drift + sigma * e[t]``
ar1
    changes ``c[t] = drift + phi * c[t-1] + sigma * e[t]``, started from
    the stationary distribution, accumulated onto ``start_price``
iid_changes
    iid log returns ``r[t] = drift + sigma * e[t]``, ``p[t] = p[t-1] * exp(r[t])``
"""

from __future__ import annotations

import datetime as dt
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError
from .series import PriceSeries, add_months, month_of

MODELS = ("random_walk", "ar1", "iid_changes")
MAX_REDRAWS = 1000
_U64 = 2**64


@dataclass(frozen=True)
class SimSpec:
    model: str = "random_walk"
    length: int = 118
    drift: float = 0.0
    sigma: float = 1.0
    phi: float = 0.0
    start_price: float = 100.0
    seed: int = 0
    start_month: dt.date = field(default=dt.date(2005, 9, 1))
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "start_month", month_of(self.start_month))
        if self.model not in MODELS:
            raise InvalidInputError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.length < 3:
            raise InvalidInputError("length must be >= 3")
        if not self.sigma >= 0:
            raise InvalidInputError("sigma must be >= 0")
        if self.model == "ar1" and not abs(self.phi) < 1:
            raise InvalidInputError("ar1 needs |phi| < 1")
        if not self.start_price > 0:
            raise InvalidInputError("start_price must be > 0")
        if not 0 <= self.seed < _U64:
            raise InvalidInputError("seed must be an unsigned 64-bit integer")


def _draw_closes(spec: SimSpec, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    m = spec.length - 1
    eps = rng.standard_normal(m)
    if spec.model == "random_walk":
        c = spec.drift + spec.sigma * eps
        return spec.start_price + np.concatenate(([0.0], np.cumsum(c)))
    if spec.model == "iid_changes":
        r = spec.drift + spec.sigma * eps
        return spec.start_price * np.exp(np.concatenate(([0.0], np.cumsum(r))))
    mu = spec.drift / (1.0 - spec.phi)
    c = np.empty(m)
    c[0] = mu + spec.sigma / math.sqrt(1.0 - spec.phi**2) * eps[0]
    for t in range(1, m):
        c[t] = spec.drift + spec.phi * c[t - 1] + spec.sigma * eps[t]
    return spec.start_price + np.concatenate(([0.0], np.cumsum(c)))


def simulate(spec: SimSpec) -> PriceSeries:
    """Draw one monthly price series.

    A draw that touches a non-positive price is discarded and the whole
    series redrawn with ``seed + 1`` (mod 2**64); the substitution is
    recorded in the returned series' ``notes``.
    """
    seed = spec.seed
    closes = _draw_closes(spec, seed)
    redraws = 0
    while not np.all(closes > 0):
        redraws += 1
        if redraws > MAX_REDRAWS:
            raise InvalidInputError("spec keeps producing non-positive prices; lower sigma or raise start_price")
        seed = (seed + 1) % _U64
        closes = _draw_closes(spec, seed)
    notes = ()
    if redraws:
        notes = (f"seed {spec.seed} produced non-positive prices; used seed {seed}",)
    label = spec.label or f"{spec.model}_seed{spec.seed}"
    dates = tuple(add_months(spec.start_month, i) for i in range(spec.length))
    return PriceSeries(label, dates, tuple(closes.tolist()), notes)
