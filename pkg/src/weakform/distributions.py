"""Reference distributions used to turn test statistics into p-values.

Only what the battery needs: the standard normal CDF, the chi-square
survival function with two degrees of freedom, and the asymptotic
Kolmogorov distribution. Significance of t-ratios uses the normal
critical value :data:`Z_CRIT_5PCT`; there is no Student-t here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInputError

Z_CRIT_5PCT = 1.96


@dataclass(frozen=True)
class PValue:
    value: float
    sided: str = "two"
    method: str = ""
    bound: Optional[str] = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.value <= 1.0:
            raise InvalidInputError(f"p-value out of [0, 1]: {self.value}")
        if self.sided not in ("one", "two"):
            raise InvalidInputError(f"sided must be 'one' or 'two', got {self.sided!r}")

    def __float__(self) -> float:
        return self.value


def std_normal_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function.

    Using ``erfc`` on both tails keeps full relative precision far out in
    either tail, where ``1 - erf`` would cancel.
    """
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def two_sided_normal_p(z: float) -> float:
    return math.erfc(abs(z) / math.sqrt(2.0))


def chi2_df2_sf(x: float) -> float:
    """Survival function of chi-square with 2 dof, ``exp(-x/2)``."""
    if x < 0:
        raise InvalidInputError(f"chi-square argument must be >= 0, got {x}")
    return math.exp(-x / 2.0)


def kolmogorov_sf(lam: float, tol: float = 1e-12) -> float:
    """Asymptotic Kolmogorov survival function ``P(K > lam)``.

    For ``lam >= 1`` this is ``2 * sum_{j>=1} (-1)**(j-1) * exp(-2 j**2 lam**2)``
    summed until a term drops below ``tol``. Below 1 that series needs many
    terms and its partial sums jitter, so the equivalent theta-function form
    ``1 - sqrt(2 pi)/lam * sum_{j>=1} exp(-(2j-1)**2 pi**2 / (8 lam**2))`` is
    used instead. The result is clamped to [0, 1].
    """
    if lam <= 0:
        return 1.0
    total = 0.0
    j = 1
    if lam < 1.0:
        c = -math.pi**2 / (8.0 * lam * lam)
        while True:
            term = math.exp(c * (2 * j - 1) ** 2)
            total += term
            if term < tol * 1e-3:
                break
            j += 1
        return min(1.0, max(0.0, 1.0 - math.sqrt(2.0 * math.pi) / lam * total))
    while True:
        term = math.exp(-2.0 * j * j * lam * lam)
        total += term if j % 2 else -term
        if term < tol:
            break
        j += 1
    return min(1.0, max(0.0, 2.0 * total))
