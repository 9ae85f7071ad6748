"""Validated input types: positive weighted samples and exponent pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DataError, ParameterDomainError

__all__ = ["PositiveSample", "ExponentPair"]


def _as_positive_array(data: Iterable[float], what: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise DataError(f"{what} must be a sequence of real numbers") from exc
    if (
        isinstance(data, np.ndarray)
        and arr.flags.writeable
        and np.may_share_memory(arr, data)
    ):
        # never freeze (or alias) a buffer the caller still owns
        arr = arr.copy()
    if arr.ndim != 1:
        raise DataError(f"{what} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise DataError(f"{what} must contain at least one entry")
    if not np.all(np.isfinite(arr)):
        raise DataError(f"{what} must be finite (no NaN or infinity)")
    if not np.all(arr > 0.0):
        raise DataError(f"{what} must be strictly positive")
    return arr


class PositiveSample:
    """A sample of strictly positive values with strictly positive weights.

    Logarithms of the values and weights are precomputed once at
    construction; every mean in this package works on those logs.  Arrays
    are frozen (non-writable) so a sample can be shared freely.
    """

    __slots__ = (
        "values",
        "weights",
        "log_values",
        "log_weights",
        "is_uniform",
        "min_value",
        "max_value",
    )

    values: np.ndarray
    weights: np.ndarray
    log_values: np.ndarray
    log_weights: np.ndarray
    is_uniform: bool
    min_value: float
    max_value: float

    def __init__(
        self, values: Iterable[float], weights: Iterable[float] | None = None
    ) -> None:
        vals = _as_positive_array(values, "values")
        if weights is None:
            wts = np.ones_like(vals)
        else:
            wts = _as_positive_array(weights, "weights")
            if wts.shape != vals.shape:
                raise DataError(
                    f"weights length {wts.size} does not match values length {vals.size}"
                )
        for arr in (vals, wts):
            arr.flags.writeable = False
        log_vals = np.log(vals)
        log_wts = np.log(wts)
        log_vals.flags.writeable = False
        log_wts.flags.writeable = False
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "weights", wts)
        object.__setattr__(self, "log_values", log_vals)
        object.__setattr__(self, "log_weights", log_wts)
        object.__setattr__(self, "is_uniform", bool(np.all(vals == vals[0])))
        object.__setattr__(self, "min_value", float(vals.min()))
        object.__setattr__(self, "max_value", float(vals.max()))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PositiveSample is immutable")

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __repr__(self) -> str:
        return f"PositiveSample(n={self.n}, uniform={self.is_uniform})"


@dataclass(frozen=True)
class ExponentPair:
    """An unordered pair of finite exponents, stored canonically as p >= q.

    The Gini mean is symmetric in its two exponents, so the constructor
    swaps them into canonical order; ``ExponentPair(0, 2) == ExponentPair(2, 0)``.
    Non-finite exponents are rejected: the p -> +/-inf limits are served
    exactly by ``extreme_value`` instead of approximated here.
    """

    p: float
    q: float

    def __post_init__(self) -> None:
        try:
            p = float(self.p)
            q = float(self.q)
        except (TypeError, ValueError) as exc:
            raise ParameterDomainError("exponents must be real numbers") from exc
        if not (np.isfinite(p) and np.isfinite(q)):
            raise ParameterDomainError(
                f"exponents must be finite, got p={self.p!r}, q={self.q!r}"
            )
        if p < q:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def gap(self) -> float:
        """Nonnegative difference p - q in canonical order."""
        return self.p - self.q

    def __repr__(self) -> str:
        return f"ExponentPair(p={self.p!r}, q={self.q!r})"
