"""Probability density on the log and natural scales."""
from __future__ import annotations

from ._backend import core
from .model import IgParams

__all__ = ["log_density", "density"]


def log_density(x: float, params: IgParams) -> float:
    """Log-density at ``x``.

    The regular branch is ``-0.5 log(2 pi phi x^3) - (x - mu)^2 / (2 phi mu^2 x)``.
    Its quadratic term is evaluated in double-double arithmetic.  Infinite
    mean switches to the limiting ``1 / (phi x)``-chi-square law.  Limits give
    ``-inf`` and spikes give ``+inf``.
    """
    return core.log_density(x, params.mean, params.dispersion)


def density(x: float, params: IgParams) -> float:
    """Density at ``x``; spikes give ``inf``."""
    return core.density(x, params.mean, params.dispersion)
