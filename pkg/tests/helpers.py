"""Shared test helpers."""

from __future__ import annotations

import math

import numpy as np

from ginikit.sample import PositiveSample


def ulps_apart(got: float, want: float) -> float:
    """Distance between two doubles in units in the last place of ``want``."""
    if got == want:
        return 0.0
    return abs(got - want) / math.ulp(abs(want))


def assert_within_ulps(got: float, want: float, max_ulps: float) -> None:
    dist = ulps_apart(got, want)
    assert dist <= max_ulps, f"{got!r} vs {want!r}: {dist:.1f} ulps (allowed {max_ulps})"


def log_uniform(rng: np.random.Generator, lo: float, hi: float, n: int) -> np.ndarray:
    return 10.0 ** rng.uniform(math.log10(lo), math.log10(hi), n)


def random_sample(
    rng: np.random.Generator,
    *,
    n_max: int = 16,
    value_lo: float = 1e-3,
    value_hi: float = 1e3,
    weighted: bool = True,
    n_min: int = 2,
) -> PositiveSample:
    """A random non-degenerate sample; values log-uniform, mild weights."""
    n = int(rng.integers(n_min, n_max + 1))
    values = log_uniform(rng, value_lo, value_hi, n)
    while np.all(values == values[0]):
        values = log_uniform(rng, value_lo, value_hi, n)
    weights = rng.uniform(0.5, 2.0, n) if weighted else None
    return PositiveSample(values, weights)
