"""Vectorized evaluation with recycling and attribute preservation.

Arguments of different lengths are recycled cyclically to the longest
length, with a warning when a length does not divide it.  The result keeps
the first argument's shape and labels unless some other argument is
longer.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ._backend import core
from .model import resolve_dispersion
from .quantile import QuantileOptions

__all__ = [
    "RecyclingWarning",
    "ValueArray",
    "recycle",
    "map_density",
    "map_cdf",
    "map_quantile",
]


class RecyclingWarning(UserWarning):
    """An argument length does not divide the result length."""


@dataclass
class ValueArray:
    """Flat float64 values with an optional shape and labels.

    ``names`` labels individual positions and suits vectors.  ``dimnames``
    holds one optional label tuple per dimension of ``shape``.  Values are
    stored flat in C order, which is also the recycling order.
    """

    values: np.ndarray
    shape: tuple | None = None
    names: tuple | None = None
    dimnames: tuple | None = None

    def __post_init__(self):
        self.values = np.ascontiguousarray(self.values, dtype=float).reshape(-1)
        if self.shape is not None:
            self.shape = tuple(int(d) for d in self.shape)
            if int(np.prod(self.shape)) != self.values.size:
                raise ValueError(f"shape {self.shape} does not hold {self.values.size} values")
        if self.names is not None:
            self.names = tuple(self.names)
            if len(self.names) != self.values.size:
                raise ValueError("names must label every position")
        if self.dimnames is not None:
            if self.shape is None or len(self.dimnames) != len(self.shape):
                raise ValueError("dimnames needs one entry per dimension")
            self.dimnames = tuple(None if d is None else tuple(d) for d in self.dimnames)
            for d, size in zip(self.dimnames, self.shape):
                if d is not None and len(d) != size:
                    raise ValueError("dimnames length does not match the dimension")

    @classmethod
    def coerce(cls, obj) -> "ValueArray":
        """Wrap scalars, sequences and numpy arrays; pass ValueArray through."""
        if isinstance(obj, ValueArray):
            return obj
        arr = np.asarray(obj, dtype=float)
        if arr.ndim >= 2:
            return cls(arr.reshape(-1), shape=arr.shape)
        return cls(arr.reshape(-1))

    def __len__(self) -> int:
        return self.values.size

    def to_numpy(self) -> np.ndarray:
        return self.values.reshape(self.shape) if self.shape is not None else self.values.copy()

    def with_values(self, values) -> "ValueArray":
        """Same attributes, new values."""
        return ValueArray(values, self.shape, self.names, self.dimnames)


def recycle(*args):
    """Recycle arguments to a common length.

    Returns ``(n, arrays)`` where every array is contiguous float64 of
    length ``n``.  Any empty argument makes ``n`` zero.
    """
    arrays = [ValueArray.coerce(a).values for a in args]
    lengths = [a.size for a in arrays]
    n = 0 if min(lengths) == 0 else max(lengths)
    out = []
    for a in arrays:
        if n and n % a.size:
            warnings.warn(
                f"argument of length {a.size} recycled to length {n}",
                RecyclingWarning,
                stacklevel=3,
            )
        out.append(np.ascontiguousarray(np.resize(a, n)))
    return n, out


def _prepare(first, mean, dispersion, shape):
    first = ValueArray.coerce(first)
    disp = resolve_dispersion(
        None if dispersion is None else np.asarray(dispersion, dtype=float),
        None if shape is None else np.asarray(shape, dtype=float),
    )
    with np.errstate(divide="ignore"):
        n, (x, mu, phi) = recycle(first, mean, disp)
    keep = first.values.size == n
    return first, keep, x, mu, phi


def _finish(first, keep, values) -> ValueArray:
    return first.with_values(values) if keep else ValueArray(values)


def map_density(x, mean=1.0, dispersion=None, shape=None, log: bool = False) -> ValueArray:
    """Elementwise density (or log-density) over recycled arguments."""
    first, keep, x, mu, phi = _prepare(x, mean, dispersion, shape)
    out = np.empty_like(x)
    core.log_density_array(x, mu, phi, out, log)
    return _finish(first, keep, out)


def map_cdf(q, mean=1.0, dispersion=None, shape=None, lower_tail: bool = True,
            log_p: bool = False) -> ValueArray:
    """Elementwise tail probability over recycled arguments."""
    first, keep, q, mu, phi = _prepare(q, mean, dispersion, shape)
    out = np.empty_like(q)
    core.cdf_array(q, mu, phi, out, lower_tail, log_p)
    return _finish(first, keep, out)


def map_quantile(p, mean=1.0, dispersion=None, shape=None, lower_tail: bool = True,
                 log_p: bool = False, options: QuantileOptions | None = None) -> ValueArray:
    """Elementwise quantile over recycled arguments."""
    opts = options or QuantileOptions()
    first, keep, p, mu, phi = _prepare(p, mean, dispersion, shape)
    out = np.empty_like(p)
    iters = np.empty(p.size, dtype=np.intc)
    stops = np.empty(p.size, dtype=np.intc)
    core.quantile_array(p, mu, phi, out, iters, stops, lower_tail, log_p, opts.maxit, opts.tol)
    return _finish(first, keep, out)
