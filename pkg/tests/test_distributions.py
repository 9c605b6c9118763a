import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from weakform import InvalidInputError, PValue, chi2_df2_sf, kolmogorov_sf, std_normal_cdf


def test_phi_center():
    assert std_normal_cdf(0.0) == 0.5


def test_phi_matches_quadrature_value():
    # 0.5 + quad(density, 0, 1.2019)
    assert std_normal_cdf(1.2019) == pytest.approx(0.8852988627736362, abs=1e-10)
    assert 2 * (1 - std_normal_cdf(1.2019)) == pytest.approx(0.2290, abs=1e-3)


@given(st.floats(-8, 8))
def test_phi_symmetry(x):
    assert std_normal_cdf(x) + std_normal_cdf(-x) == pytest.approx(1.0, abs=1e-12)


def test_monotone():
    xs = np.linspace(-8, 8, 401)
    phi = [std_normal_cdf(x) for x in xs]
    assert all(b >= a for a, b in zip(phi, phi[1:]))
    lam = np.linspace(0, 3, 301)
    k = [kolmogorov_sf(v) for v in lam]
    assert all(b <= a for a, b in zip(k, k[1:]))
    c = [chi2_df2_sf(v) for v in np.linspace(0, 40, 201)]
    assert all(b <= a for a, b in zip(c, c[1:]))


def test_chi2_df2():
    assert chi2_df2_sf(0.0) == 1.0
    assert chi2_df2_sf(2 * math.log(2)) == pytest.approx(0.5, abs=1e-15)
    assert chi2_df2_sf(7.2904) == pytest.approx(0.026116, abs=1e-6)
    with pytest.raises(InvalidInputError):
        chi2_df2_sf(-0.1)


@pytest.mark.parametrize("x", [0.1, 1.0, 3.7, 10.0, 25.0])
def test_chi2_df2_against_density(x):
    tail = quad(lambda t: 0.5 * math.exp(-t / 2), x, math.inf, epsabs=1e-13)[0]
    assert chi2_df2_sf(x) == pytest.approx(tail, abs=1e-8)


def test_kolmogorov():
    assert kolmogorov_sf(0.0) == 1.0
    assert kolmogorov_sf(10.0) < 1e-12
    # 40-digit series sum
    assert kolmogorov_sf(1.0) == pytest.approx(0.2699996716773545, abs=1e-12)
    # textbook 5% critical point
    assert kolmogorov_sf(1.3581) == pytest.approx(0.05, abs=1e-4)


def test_pvalue_bounds():
    with pytest.raises(InvalidInputError):
        PValue(1.2)
    with pytest.raises(InvalidInputError):
        PValue(0.3, sided="left")
    assert float(PValue(0.25)) == 0.25
