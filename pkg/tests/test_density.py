"""Density and log-density."""
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from invgauss import IgParams, density, log_density, mode
from oracle import oracle_density, rel_err

INF, NAN = math.inf, math.nan
ULP = 2.0 ** -52
SIX = (-1.0, 0.0, 1.0, 2.0, INF, NAN)


def vec(xs, mu, phi):
    return np.array([density(x, IgParams(mu, phi)) for x in xs])


class TestExamples:
    def test_at_mean(self):
        assert log_density(1.0, IgParams(1.0, 1.0)) == pytest.approx(-0.9189385332046727, abs=ULP)
        assert density(1.0, IgParams(1.0, 1.0)) == 0.3989422804014327

    def test_regular_vector(self):
        np.testing.assert_allclose(vec(SIX, 1.5, 0.7), [0, 0, 0.440, 0.162, 0, NAN], atol=5e-4)

    def test_infinite_mean_vector(self):
        np.testing.assert_allclose(vec(SIX, INF, 0.7), [0, 0, 0.233, 0.118, 0, NAN], atol=5e-4)

    def test_infinite_dispersion_vector(self):
        np.testing.assert_array_equal(vec(SIX, NAN, INF), [0, INF, 0, 0, 0, NAN])

    def test_missing_parameters(self):
        np.testing.assert_array_equal(vec((-1.0, 0.0, 1.0, INF), NAN, NAN), [0, NAN, NAN, 0])

    def test_spike_at_mean(self):
        p = IgParams(2.0, 0.0)
        assert density(2.0, p) == INF
        assert density(1.0, p) == 0.0
        assert log_density(1.0, p) == -INF

    def test_invalid(self):
        assert math.isnan(density(1.0, IgParams(-1.0, 1.0)))
        assert math.isnan(log_density(1.0, IgParams(1.0, -1.0)))


class TestAccuracy:
    @given(st.floats(-6, 6), st.floats(-6, 6), st.floats(-4, 4))
    def test_matches_mpmath(self, lmu, lphi, lx):
        mu, phi = 10.0 ** lmu, 10.0 ** lphi
        x = mu * 10.0 ** lx
        want = mp.log(oracle_density(x, mu, phi))
        got = log_density(x, IgParams(mu, phi))
        # the exponent is evaluated exactly, so the error is a few ulp of its size
        assert abs(got - want) <= 8 * ULP * max(1.0, abs(want))

    def test_natural_scale(self):
        # agrees with exp(log_density) up to the rounding that exp magnifies
        rng = np.random.default_rng(1)
        for _ in range(500):
            mu, phi, x = 10.0 ** rng.uniform(-3, 3, 3)
            p = IgParams(mu, phi)
            d = density(x, p)
            if d > 1e-300:
                ld = log_density(x, p)
                # the log-density is a sum of terms that may cancel
                terms = 1 + (x - mu) ** 2 / (2 * phi * mu * mu * x) + abs(math.log(phi)) / 2 \
                    + 1.5 * abs(math.log(x))
                assert abs(d - math.exp(ld)) <= 2 * terms * ULP * d
                assert rel_err(d, oracle_density(x, mu, phi)) <= 4 * ULP

    @given(st.floats(-4, 4), st.floats(-4, 4), st.floats(-3, 3))
    def test_scaling(self, lmu, lphi, lx):
        mu, phi = 10.0 ** lmu, 10.0 ** lphi
        x = mu * 10.0 ** lx
        a = log_density(x, IgParams(mu, phi))
        b = log_density(x / mu, IgParams(1.0, phi * mu)) - math.log(mu)
        # rounding x / mu and phi mu moves the log-density by its slope in log x
        slope = abs(-1.5 - (x * x - mu * mu) / (2 * phi * mu * mu * x))
        assert abs(a - b) <= 4 * ULP * (max(1.0, abs(a)) + abs(math.log(mu)) + 2 * slope)

    @pytest.mark.parametrize("mu", [0.1, 1.0, 10.0])
    @pytest.mark.parametrize("phi", [0.1, 1.0, 10.0])
    def test_normalization(self, mu, phi):
        p = IgParams(mu, phi)
        m = mode(p)
        with mp.workdps(20):
            total = mp.quad(lambda t: density(float(t), p), [0, m / 4, m, mu, 10 * mu, mp.inf])
        assert abs(total - 1) <= 1e-10

    def test_monotone_around_mode(self):
        for mu, phi in ((1.0, 1.0), (0.01, 300.0), (1e3, 1e-4)):
            p = IgParams(mu, phi)
            m = mode(p)
            left = [density(x, p) for x in np.linspace(m * 1e-3, m, 500)]
            right = [density(x, p) for x in np.linspace(m, 50 * mu, 500)]
            assert np.all(np.diff(left) >= 0) and np.all(np.diff(right) <= 0)

    def test_infinite_mean_is_limit(self):
        for x in (0.5, 1.0, 5.0):
            for phi in (0.5, 2.0):
                lim = log_density(x, IgParams(INF, phi))
                assert abs(log_density(x, IgParams(1e30, phi)) - lim) <= 1e-10
                want = -0.5 * math.log(2 * math.pi * phi * x ** 3) - 1 / (2 * phi * x)
                assert lim == pytest.approx(want, rel=1e-15)
