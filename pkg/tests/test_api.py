"""Vectorized evaluation with recycling and attribute preservation."""
import math
import warnings

import numpy as np
import pytest

from invgauss import (
    IgParams,
    QuantileOptions,
    RecyclingWarning,
    ValueArray,
    cdf,
    density,
    log_density,
    map_cdf,
    map_density,
    map_quantile,
    quantile,
)
from oracle import oracle_quantile

INF, NAN = math.inf, math.nan


class TestValueArray:
    def test_validation(self):
        with pytest.raises(ValueError):
            ValueArray([1, 2, 3], shape=(2, 2))
        with pytest.raises(ValueError):
            ValueArray([1, 2], names=("a",))
        with pytest.raises(ValueError):
            ValueArray([1, 2, 3, 4], shape=(2, 2), dimnames=(("a", "b"),))
        with pytest.raises(ValueError):
            ValueArray([1, 2, 3, 4], shape=(2, 2), dimnames=(("a",), None))

    def test_coerce(self):
        v = ValueArray.coerce(np.arange(6.0).reshape(2, 3))
        assert v.shape == (2, 3)
        np.testing.assert_array_equal(v.to_numpy(), np.arange(6.0).reshape(2, 3))
        assert ValueArray.coerce(2.5).values.tolist() == [2.5]


class TestExamples:
    def test_labeled_matrix(self):
        p = ValueArray([[0.6001, 0.3435], [0.4919, 0.4987]], shape=(2, 2),
                       dimnames=(("A", "B"), ("X1", "X2")))
        out = map_quantile(p, 1.0, 1.0)
        assert out.shape == (2, 2) and out.dimnames == (("A", "B"), ("X1", "X2"))
        for got, prob in zip(out.values, p.values):
            assert got == pytest.approx(float(oracle_quantile(prob, 1.0, 1.0)), rel=1e-15)
        # printed probabilities carry 4 decimals; allow what that rounding moves
        printed = np.array([0.8486, 0.4759, 0.6637, 0.6739])
        band = 5e-5 / np.array([density(q, IgParams()) for q in out.values]) + 5e-5
        assert np.all(np.abs(out.values - printed) <= band)

    def test_named_vector(self):
        p = ValueArray([0.1, 0.6, 0.7, 0.9], names=("A", "B", "C", "D"))
        out = map_quantile(p)
        assert out.names == ("A", "B", "C", "D")
        assert [f"{v:.4f}" for v in out.values] == ["0.2376", "0.8483", "1.0851", "2.1430"]

    def test_recycled_mean_with_invalid(self):
        out = map_cdf([1.0, 2.0, 3.0], [0.0, 1.0, 2.0], 1.0)
        assert math.isnan(out.values[0])
        assert out.values[1] == cdf(2.0, IgParams(1.0, 1.0))
        assert out.values[2] == cdf(3.0, IgParams(2.0, 1.0))

    def test_grid(self):
        out = map_quantile([0.5], [0.0, 1.0, 2.0])
        assert math.isnan(out.values[0])
        assert [f"{v:.4f}" for v in out.values[1:]] == ["0.6758", "1.0285"]


class TestSemantics:
    def test_bitwise_equal_to_scalar(self):
        rng = np.random.default_rng(8)
        x = 10.0 ** rng.uniform(-3, 3, 200)
        mu = 10.0 ** rng.uniform(-3, 3, 200)
        phi = 10.0 ** rng.uniform(-3, 3, 200)
        p = rng.random(200)
        d = map_density(x, mu, phi).values
        ld = map_density(x, mu, phi, log=True).values
        c = map_cdf(x, mu, phi, lower_tail=False, log_p=True).values
        q = map_quantile(p, mu, phi).values
        for i in range(200):
            params = IgParams(mu[i], phi[i])
            assert d[i] == density(x[i], params)
            assert ld[i] == log_density(x[i], params)
            assert c[i] == cdf(x[i], params, lower_tail=False, log_p=True)
            assert q[i] == quantile(p[i], params)

    def test_recycling_associative(self):
        x = np.linspace(0.1, 3, 6)
        a = map_cdf(x, [1.0, 2.0], 0.5).values
        b = map_cdf(x, [1.0, 2.0] * 3, 0.5).values
        np.testing.assert_array_equal(a, b)

    def test_non_divisible_warns(self):
        with pytest.warns(RecyclingWarning):
            out = map_cdf([1.0, 2.0, 3.0], [1.0, 2.0], 1.0)
        assert out.values[2] == cdf(3.0, IgParams(1.0, 1.0))

    def test_divisible_is_silent(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            map_cdf([1.0, 2.0, 3.0, 4.0], [1.0, 2.0], 1.0)

    def test_longer_parameter_drops_attributes(self):
        p = ValueArray([0.5], names=("only",))
        out = map_quantile(p, [1.0, 2.0])
        assert out.names is None and out.shape is None and len(out) == 2

    def test_zero_length(self):
        assert len(map_cdf([1.0, 2.0], [])) == 0
        assert len(map_density([], 1.0)) == 0

    def test_missing_values(self):
        out = map_density([1.0, NAN, 2.0], [1.0, 1.0, NAN], 1.0)
        assert out.values[0] > 0 and math.isnan(out.values[1]) and math.isnan(out.values[2])
        # support limits override missing parameters
        np.testing.assert_array_equal(map_density([-1.0], NAN, NAN).values, [0.0])
        np.testing.assert_array_equal(map_cdf([-1.0], NAN, NAN).values, [0.0])

    def test_shape_argument(self):
        a = map_quantile([0.00013], 1.0, shape=3.0).values[0]
        assert f"{a:.4g}" == "0.1504"
        b = map_quantile([0.00013], 1.0, dispersion=5.0, shape=3.0).values[0]
        assert a == b

    def test_options(self):
        out = map_quantile([1e-10], 1.5, 0.7, options=QuantileOptions(maxit=1))
        assert out.values[0] != quantile(1e-10, IgParams(1.5, 0.7))
