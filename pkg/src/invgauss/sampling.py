"""Random variates by the chi-square transformation with root selection.

For each draw ``Y = N^2`` the two roots of ``(x - mu)^2 = Y phi mu^2 x``
are formed without cancellation.  The smaller root ``x1`` is taken with
probability ``mu / (mu + x1)``, otherwise the larger root ``mu^2 / x1``.
"""
from __future__ import annotations

import numpy as np

from ._backend import core
from .model import CaseTag, IgParams

__all__ = ["ALGORITHM_ID", "RngStream", "roots", "sample"]

ALGORITHM_ID = "numpy.PCG64+chisq1-root-selection/1"


class RngStream:
    """Seedable generator (numpy PCG64); one stream per consumer.

    Not safe to share between threads.  Use ``spawn`` to derive
    independent streams.
    """

    algorithm_id = ALGORITHM_ID

    def __init__(self, seed=None, *, generator: np.random.Generator | None = None):
        self._gen = generator if generator is not None else np.random.Generator(np.random.PCG64(seed))

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def spawn(self, n: int) -> list["RngStream"]:
        """Independent child streams."""
        return [RngStream(generator=g) for g in self._gen.spawn(n)]

    def chisq1(self, n: int) -> np.ndarray:
        return self._gen.standard_normal(n) ** 2

    def uniform(self, n: int) -> np.ndarray:
        return self._gen.random(n)


def roots(y, mean, dispersion):
    """Both roots ``(x1, x2)`` of ``(x - mu)^2 = y phi mu^2 x`` with ``x1 <= x2``.

    ``x2 = mu t`` and ``x1 = mu / t`` with
    ``t = 1 + s/2 + sqrt(s) sqrt(1 + s/4)`` and ``s = phi mu y``.
    The product is therefore ``mu^2`` up to rounding and nothing cancels.
    """
    y = np.asarray(y, dtype=float)
    mu = np.asarray(mean, dtype=float)
    s = dispersion * mu * y
    t = 1.0 + 0.5 * s + np.sqrt(s) * np.sqrt(1.0 + 0.25 * s)
    return mu / t, mu * t


def _select(y, u, mu, phi):
    x1, x2 = roots(y, mu, phi)
    with np.errstate(invalid="ignore"):
        take_small = u * (mu + x1) <= mu
    return np.where(take_small, x1, x2)


def sample(n: int, params: IgParams, rng: RngStream | int | None = None) -> np.ndarray:
    """``n`` variates from IG(mu, phi).

    Parameters
    ----------
    n : int
        Number of draws (may be zero).
    params : IgParams
    rng : RngStream, int or None
        Stream to draw from, or a seed for a fresh one.

    Notes
    -----
    Limits are honoured: ``phi = 0`` gives ``mu``, ``phi = inf`` gives 0 and
    ``mu = inf`` gives ``1 / (phi Y)``.  Invalid or missing parameters give
    NaN.  Every case consumes the same random numbers, two per draw, so
    streams stay aligned across parameter values.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    stream = rng if isinstance(rng, RngStream) else RngStream(rng)
    mu, phi = params.mean, params.dispersion
    y = stream.chisq1(n)
    u = stream.uniform(n)
    case = core.param_class(mu, phi)
    if case == CaseTag.REGULAR:
        return _select(y, u, mu, phi)
    if case == CaseTag.SPIKE_AT_MEAN:
        return np.full(n, mu)
    if case == CaseTag.SPIKE_AT_ZERO:
        return np.zeros(n)
    if case == CaseTag.INVERSE_CHISQUARE:
        with np.errstate(divide="ignore"):
            return 1.0 / (phi * y)
    return np.full(n, np.nan)
