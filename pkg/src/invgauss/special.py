"""Elementary kernels: normal log-cdf and quantile, gamma quantile, log1p/expm1.

All functions take and return Python floats, propagate NaN and never raise
on out-of-domain input (they return NaN instead).
"""
from __future__ import annotations

from ._backend import core

__all__ = [
    "norm_logcdf",
    "norm_cdf",
    "norm_quantile",
    "gamma_quantile",
    "log1p_exact",
    "expm1_exact",
    "mills_ratio",
    "mills_diff",
    "chisq1_sf",
]


def norm_logcdf(z: float, lower_tail: bool = True) -> float:
    """Log of the standard normal cdf.

    Parameters
    ----------
    z : float
        Evaluation point.
    lower_tail : bool
        If false, return ``log(1 - Phi(z))``.

    Returns
    -------
    float
        Finite for every finite ``z``, even where ``Phi(z)`` underflows.
    """
    return core.norm_logcdf(z, lower_tail)


def norm_cdf(z: float, lower_tail: bool = True) -> float:
    """Standard normal cdf, or survival function when ``lower_tail`` is false."""
    return core.norm_cdf(z, lower_tail)


def norm_quantile(p: float, lower_tail: bool = True, log_p: bool = False) -> float:
    """Standard normal quantile.

    A rational initial approximation is polished by Halley steps whose
    residual is formed on the log scale, so tiny tail probabilities keep
    full relative accuracy.

    Parameters
    ----------
    p : float
        Probability in [0, 1], or its log when ``log_p`` is true.
    lower_tail : bool
        Whether ``p`` is ``P(Z <= z)`` or ``P(Z > z)``.
    log_p : bool
        Interpret ``p`` as a log-probability.
    """
    return core.norm_quantile(p, lower_tail, log_p)


def gamma_quantile(p: float, shape_k: float, scale_theta: float,
                   lower_tail: bool = True, log_p: bool = False) -> float:
    """Gamma quantile with relative accuracy of about 1e-10 for shape up to 1e5.

    Wilson-Hilferty start refined by Newton on the log-cdf.  Above shape 1e5
    the central region returns the unrefined Wilson-Hilferty value.
    Intended for starting values, not as a general gamma library.
    """
    return core.gamma_quantile(p, shape_k, scale_theta, lower_tail, log_p)


def log1p_exact(x: float) -> float:
    """``log(1 + x)`` accurate for small ``x``; ``-inf`` at -1, NaN below."""
    return core.log1p_exact(x)


def expm1_exact(x: float) -> float:
    """``exp(x) - 1`` accurate for small ``x``."""
    return core.expm1_exact(x)


def mills_ratio(x: float) -> float:
    """Mills ratio ``(1 - Phi(x)) / phi(x)``."""
    return core.mills_ratio(x)


def mills_diff(z: float, h: float) -> float:
    """``R(z) - R(z + h)`` for ``z >= -1``, free of cancellation."""
    return core.mills_diff(z, h)


def chisq1_sf(z: float, log_p: bool = False) -> float:
    """Upper tail of chi-square with one degree of freedom, ``2 Phi(-sqrt(z))``."""
    return core.chisq1_sf(z, log_p)
