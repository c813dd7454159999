"""Compiled and interpreted cores give the same numbers."""
import math

import numpy as np
import pytest

from invgauss._backend import BACKEND, load_compiled, load_pure

pytestmark = pytest.mark.skipif(BACKEND != "compiled", reason="compiled core not built")


@pytest.fixture(scope="module")
def cores():
    return load_compiled(), load_pure()


def cases(n, seed):
    rng = np.random.default_rng(seed)
    mu = 10.0 ** rng.uniform(-4, 4, n)
    phi = 10.0 ** rng.uniform(-4, 4, n)
    return mu, phi, mu * 10.0 ** rng.uniform(-3, 3, n), rng


def test_flags(cores):
    fast, slow = cores
    assert fast.COMPILED and not slow.COMPILED


def test_density_and_cdf_bitwise(cores):
    fast, slow = cores
    mu, phi, x, _ = cases(400, 1)
    for m, f, q in zip(mu, phi, x):
        assert fast.log_density(q, m, f) == slow.log_density(q, m, f)
        assert fast.density(q, m, f) == slow.density(q, m, f)
        for lower in (True, False):
            for log_p in (True, False):
                assert fast.cdf(q, m, f, lower, log_p) == slow.cdf(q, m, f, lower, log_p)


def test_quantile_close(cores):
    # lgamma and hypot may differ by an ulp between C and Python
    fast, slow = cores
    mu, phi, _, rng = cases(200, 2)
    p = 10.0 ** rng.uniform(-300, -0.31, 200)
    for m, f, pi in zip(mu, phi, p):
        for lower in (True, False):
            a = fast.quantile(pi, m, f, lower, False, 200, 1e-14)
            b = slow.quantile(pi, m, f, lower, False, 200, 1e-14)
            assert abs(a - b) <= 4 * 2.0 ** -52 * a


def test_special_values(cores):
    fast, slow = cores
    for args in ((math.nan, 1.0, 1.0), (-1.0, math.nan, math.nan), (0.0, math.nan, math.inf),
                 (2.0, math.inf, 0.7), (1.0, 1.0, 0.0), (math.inf, 1.0, 1.0)):
        a, b = fast.density(*args), slow.density(*args)
        assert a == b or (math.isnan(a) and math.isnan(b))
        a, b = fast.cdf(*args, True, False), slow.cdf(*args, True, False)
        assert a == b or (math.isnan(a) and math.isnan(b))
