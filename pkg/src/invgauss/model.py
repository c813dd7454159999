"""Parameters, special-case classification and the mode."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._backend import core

__all__ = ["CaseTag", "IgParams", "classify", "mode", "resolve_dispersion"]


CaseTag = enum.IntEnum("CaseTag", core.CASE_CODES)
CaseTag.__doc__ = "Which formula governs an evaluation point."


def resolve_dispersion(dispersion=None, shape=None):
    """Dispersion implied by the arguments; ``shape`` wins when both are given.

    Works elementwise on numpy arrays as well as on scalars.
    """
    if shape is not None:
        return 1.0 / shape
    return 1.0 if dispersion is None else dispersion


@dataclass(frozen=True)
class IgParams:
    """Mean ``mu`` and dispersion ``phi`` of an inverse Gaussian law.

    Values are stored as given; out-of-range values are not rejected but
    classify as ``CaseTag.INVALID`` and evaluate to NaN downstream.
    """

    mean: float = 1.0
    dispersion: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "mean", float(self.mean))
        object.__setattr__(self, "dispersion", float(self.dispersion))

    @classmethod
    def from_shape(cls, mean: float = 1.0, shape: float = 1.0) -> "IgParams":
        """Build from the shape ``lambda = 1 / phi``."""
        return cls(mean, resolve_dispersion(shape=float(shape)))

    @classmethod
    def resolve(cls, mean: float = 1.0, dispersion=None, shape=None) -> "IgParams":
        """Build from whichever of dispersion or shape is supplied."""
        return cls(mean, resolve_dispersion(dispersion, shape))

    @property
    def shape(self) -> float:
        return 1.0 / self.dispersion if self.dispersion != 0.0 else math.inf

    @property
    def phi_m(self) -> float:
        """Squared coefficient of variation ``phi * mu``."""
        return self.dispersion * self.mean

    @property
    def case(self) -> CaseTag:
        """Classification of the parameters alone."""
        return CaseTag(core.param_class(self.mean, self.dispersion))

    @property
    def is_regular(self) -> bool:
        return self.case is CaseTag.REGULAR


def classify(x: float, params: IgParams) -> CaseTag:
    """Special-case tag for evaluating at ``x``.

    NaN in ``x`` always gives ``MISSING``.  Points below zero or at
    infinity are limits whatever the parameters.  Negative mean or
    dispersion is ``INVALID``.
    """
    return CaseTag(core.classify(x, params.mean, params.dispersion))


def mode(params: IgParams) -> float:
    """Mode ``mu / (sqrt(1 + k^2) + k)`` with ``k = 1.5 phi mu``.

    The form is free of cancellation for every ``k``.  Returns NaN unless
    both parameters are finite and positive.
    """
    return core.mode(params.mean, params.dispersion)
