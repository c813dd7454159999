"""Inverse Gaussian distribution IG(mu, phi) to machine accuracy.

Mean ``mu`` and dispersion ``phi`` (shape ``1 / phi``).  Scalar functions
live in the submodules; ``map_*`` functions evaluate over arrays with
recycling.
"""
__version__ = "0.1.0"

from ._backend import BACKEND
from .api import RecyclingWarning, ValueArray, map_cdf, map_density, map_quantile
from .cdf import cdf, log_cdf, log_tail_asymptotic
from .density import density, log_density
from .model import CaseTag, IgParams, classify, mode
from .quantile import NewtonTrace, ProbValue, QuantileOptions, StopReason, quantile, starting_value
from .sampling import RngStream, sample

__all__ = [
    "BACKEND",
    "CaseTag",
    "IgParams",
    "NewtonTrace",
    "ProbValue",
    "QuantileOptions",
    "RecyclingWarning",
    "RngStream",
    "StopReason",
    "ValueArray",
    "cdf",
    "classify",
    "density",
    "log_cdf",
    "log_density",
    "log_tail_asymptotic",
    "map_cdf",
    "map_density",
    "map_quantile",
    "mode",
    "quantile",
    "sample",
    "starting_value",
]
