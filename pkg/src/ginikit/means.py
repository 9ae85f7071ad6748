"""Weighted Gini, Lehmer and power means, evaluated entirely in the log domain.

For a sample a with weights w, write S_p = sum_i w_i * a_i**p.  The two-
parameter Gini mean is

    G(p, q) = (S_p / S_q) ** (1 / (p - q))          for p != q,
    G(p, p) = exp( sum_i w_i a_i**p ln a_i / S_p )  at equal parameters,

with G(0, 0) the weighted geometric mean.  Lehmer means are G(p, p-1) and
power means are M_r = G(r, 0), so everything here funnels through one
evaluation path.

That path never materializes a_i**p.  It works with t_i = p*ln(a_i) +
ln(w_i), shifts by m = max(t_i) so every exponential argument is <= 0, and
accumulates exp(t_i - m) with compensated summation in a fixed sorted order.
Results stay finite and inside [min(a), max(a)] for values anywhere in the
double range and |p| in the hundreds, where the textbook formula overflows
almost immediately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import ParameterDomainError
from .sample import ExponentPair, PositiveSample

__all__ = [
    "LogPowerSum",
    "log_power_sum",
    "gini_mean",
    "identical_parameter_gini",
    "power_mean",
    "lehmer_mean",
    "extreme_value",
    "secant_slope",
    "branch_threshold",
]


@dataclass(frozen=True)
class LogPowerSum:
    """The log-domain summary of one power sum S_p.

    Attributes:
        p: the exponent.
        log_sum: ln S_p.
        moment1: (sum_i w_i a_i**p ln a_i) / S_p, the tilted mean of ln a.
            This equals d/dp ln S_p.
        moment2: (sum_i w_i a_i**p ln^2 a_i) / S_p, the tilted second moment.
        moment2_centered: the tilted variance of ln a, i.e.
            moment2 - moment1**2 computed by a centered pass, hence
            nonnegative by construction.  This equals d^2/dp^2 ln S_p.

    ``moment2`` is recomposed as ``moment1**2 + moment2_centered``, which
    guarantees ``moment2 >= moment1**2`` in floating point, with equality
    exactly for uniform samples.
    """

    p: float
    log_sum: float
    moment1: float
    moment2: float
    moment2_centered: float


def _finite_exponent(p: float, name: str = "p") -> float:
    try:
        value = float(p)
    except (TypeError, ValueError) as exc:
        raise ParameterDomainError(f"exponent {name} must be a real number") from exc
    if not math.isfinite(value):
        raise ParameterDomainError(
            f"exponent {name} must be finite, got {p!r}; use extreme_value for limits"
        )
    return value


def branch_threshold(p: float, q: float) -> float:
    """Width of the equal-parameter branch around p == q.

    Below this separation the secant (ln S_p - ln S_q)/(p - q) loses too many
    digits to cancellation, while the tilted mean at the midpoint is within
    O(gap^2) of the true value, far below double rounding error.
    """
    return 1e-8 * (1.0 + max(abs(p), abs(q)))


def log_power_sum(sample: PositiveSample, p: float) -> LogPowerSum:
    """Evaluate ln S_p and the tilted log-moments, stably.

    The shifted weights u_i = exp(t_i - max t) are accumulated in ascending
    (t_i, ln a_i) order with Neumaier compensation, so the result is
    invariant under permutation of the sample and reproducible to the bit
    across backends.
    """
    p = _finite_exponent(p)
    la = sample.log_values
    t = p * la + sample.log_weights
    shift = float(t.max())
    order = np.lexsort((la, t))
    total, mean, variance = _backend.exp_moments(
        np.ascontiguousarray(t[order]), np.ascontiguousarray(la[order]), shift
    )
    log_sum = shift + math.log(total)
    if sample.is_uniform:
        # All values equal c: the tilted distribution of ln a is a point mass
        # at ln c whatever the weights, so short-circuit to the exact moments.
        mean = float(la[0])
        variance = 0.0
    return LogPowerSum(
        p=p,
        log_sum=log_sum,
        moment1=mean,
        moment2=mean * mean + variance,
        moment2_centered=variance,
    )


def secant_slope(sample: PositiveSample, p: float, q: float) -> float:
    """Secant slope (ln S_p - ln S_q) / (p - q); equals ln G(p, q).

    Since ln S_p is convex in p, this slope is nondecreasing in both
    endpoints, which is the engine behind every inequality check in
    :mod:`ginikit.audit`.  For p == q (within :func:`branch_threshold`) the
    slope degenerates to the tangent d/dp ln S_p, served by the tilted mean
    at the midpoint.  Uniform samples short-circuit to ln of the common
    value.
    """
    p = _finite_exponent(p, "p")
    q = _finite_exponent(q, "q")
    if sample.is_uniform:
        return math.log(float(sample.values[0]))
    if abs(p - q) <= branch_threshold(p, q):
        return log_power_sum(sample, 0.5 * (p + q)).moment1
    return (log_power_sum(sample, p).log_sum - log_power_sum(sample, q).log_sum) / (
        p - q
    )


def _clamp_to_range(sample: PositiveSample, value: float) -> float:
    # The exact mean lies in [min, max]; the computed one can escape by a few
    # ulps through the final exp.  Clamping restores the bound without moving
    # the value more than that rounding error.
    return min(max(value, sample.min_value), sample.max_value)


def gini_mean(sample: PositiveSample, params: ExponentPair) -> float:
    """The two-parameter Gini mean G(p, q) of a positive weighted sample.

    Symmetric in (p, q) by construction (the pair is stored in canonical
    order).  The result always lies in [min(sample), max(sample)] and is
    finite for any finite exponents.
    """
    if sample.is_uniform:
        return float(sample.values[0])
    return _clamp_to_range(sample, math.exp(secant_slope(sample, params.p, params.q)))


def identical_parameter_gini(sample: PositiveSample, p: float) -> float:
    """G(p, p): exp of the a**p-tilted mean of ln a.

    At p = 0 this is the weighted geometric mean.
    """
    p = _finite_exponent(p)
    if sample.is_uniform:
        return float(sample.values[0])
    return _clamp_to_range(sample, math.exp(log_power_sum(sample, p).moment1))


def power_mean(sample: PositiveSample, r: float) -> float:
    """The weighted power mean M_r = (sum w a**r / sum w) ** (1/r).

    Implemented as G(r, 0), which is the same function: with q = 0 the
    denominator power sum is the total weight.  For |r| at or below the
    branch threshold the evaluation degenerates to the weighted geometric
    mean, which is M_0's limiting value.
    """
    r = _finite_exponent(r, "r")
    return gini_mean(sample, ExponentPair(r, 0.0))


def lehmer_mean(sample: PositiveSample, p: float) -> float:
    """The Lehmer mean sum(w a**p) / sum(w a**(p-1)), i.e. G(p, p-1)."""
    p = _finite_exponent(p)
    return gini_mean(sample, ExponentPair(p, p - 1.0))


def extreme_value(sample: PositiveSample, which: str) -> float:
    """Exact max or min of the sample: the p -> +inf / q -> -inf mean limits."""
    if which == "max":
        return sample.max_value
    if which == "min":
        return sample.min_value
    raise ParameterDomainError(f"which must be 'max' or 'min', got {which!r}")
