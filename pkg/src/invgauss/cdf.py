"""Tail probabilities on the natural and log scales.

Both tails come from one closed form written through the Mills ratio
``R``.  With ``z = (q_m - 1) / r``, ``x = (q_m + 1) / r`` and
``h = x - z = 2 / r``, the left tail is ``phi(z) (R(-z) + R(x))`` for
``z < 0``.  The right tail is ``phi(z) (R(z) - R(x))``, whose difference
is computed directly so it never cancels.  The Gaussian factor uses the
exponent ``(q - mu)^2 / (2 phi mu^2 q)`` in double-double arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import core
from .model import IgParams
from .special import norm_logcdf

__all__ = [
    "StandardizedArgs",
    "LogTailTerms",
    "standardize",
    "log_tail_terms",
    "log_cdf",
    "cdf",
    "log_tail_asymptotic",
]


@dataclass(frozen=True)
class StandardizedArgs:
    """Dimensionless quantities after scaling to unit mean."""

    q_m: float
    phi_m: float
    r: float

    @property
    def z(self) -> float:
        return (self.q_m - 1.0) / self.r

    @property
    def x(self) -> float:
        return (self.q_m + 1.0) / self.r


@dataclass(frozen=True)
class LogTailTerms:
    """Log of the two normal terms making up a tail probability."""

    a: float
    b: float

    def combine(self, lower_tail: bool = True) -> float:
        """``a + log1p(+-exp(b - a))``; loses accuracy when ``b`` is close to ``a``."""
        if self.a == -math.inf:
            return -math.inf
        t = math.exp(self.b - self.a)
        if lower_tail:
            return self.a + math.log1p(t)
        return self.a + math.log1p(-t) if t < 1.0 else -math.inf


def standardize(q: float, params: IgParams) -> StandardizedArgs:
    """``q_m = q / mu``, ``phi_m = phi mu`` and ``r = sqrt(q phi)``."""
    return StandardizedArgs(q / params.mean, params.phi_m, math.sqrt(q * params.dispersion))


def log_tail_terms(q: float, params: IgParams, lower_tail: bool = True) -> LogTailTerms:
    """Two-term log decomposition of a tail probability, for diagnostics.

    The production path does not use this form; it is kept to inspect
    where the plain ``log1p(exp(b - a))`` recombination loses digits.
    """
    s = standardize(q, params)
    a = norm_logcdf(s.z, lower_tail)
    b = 2.0 / s.phi_m + norm_logcdf(-s.x, True)
    return LogTailTerms(a, b)


def log_cdf(q: float, params: IgParams, lower_tail: bool = True) -> float:
    """Log of ``P(X <= q)``, or of ``P(X > q)`` when ``lower_tail`` is false."""
    return core.cdf(q, params.mean, params.dispersion, lower_tail, True)


def cdf(q: float, params: IgParams, lower_tail: bool = True, log_p: bool = False) -> float:
    """``P(X <= q)`` or ``P(X > q)``, computed directly on the requested scale.

    Values down to the subnormal range are returned, not flushed to zero.
    """
    return core.cdf(q, params.mean, params.dispersion, lower_tail, log_p)


def log_tail_asymptotic(q: float, params: IgParams) -> float:
    """Large-``q`` approximation to the log upper tail.

    ``1/phi_m - 0.5 log(pi) - log(2 phi_m) - 1.5 log(q_m / (2 phi_m) + 1) - q_m / (2 phi_m)``.

    Good to a couple of digits once ``(q_m - 1) / sqrt(phi_m)`` reaches 10.
    Reaches ten or more digits around 1e5 when ``phi_m`` is of order one
    or smaller.
    """
    return core.log_tail_asymptotic(q, params.mean, params.dispersion)
