"""Mechanical verification of the Gini-mean comparison inequalities.

All checks ride on one fact: f(p) = ln S_p is strictly convex for non-uniform
samples (its second derivative is the a**p-tilted variance of ln a, positive
unless all values coincide).  Hence the secant slope ln G(p, q) =
(f(p) - f(q)) / (p - q) is strictly increasing in both endpoints, which gives

* monotonicity: raising (p, q) componentwise raises G(p, q);
* the power-mean comparison: G(p, q) vs M_r = G(r, 0) with the bracketing
  parameter orders;
* positivity of the convexity gap itself.

Margins are reported in the log domain (ln RHS - ln LHS) where the claims
are exact secant-slope differences, immune to the final exp rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisError
from .means import log_power_sum, secant_slope
from .sample import ExponentPair, PositiveSample

__all__ = [
    "AuditVerdict",
    "ParameterOrder",
    "check_monotonicity",
    "check_power_mean_bound",
    "convexity_gap",
    "scan_monotonicity",
    "secant_slope",
    "strict_tolerance",
]


def strict_tolerance(log_scale: float) -> float:
    """Margin below which a positive verdict is flagged as weak.

    Scaled to the magnitude of the log-means involved: differences smaller
    than about 1e-12 * (1 + |ln G|) are within accumulated rounding error of
    the two slope evaluations, so a "holds" with such a margin should not be
    read as numerically established.
    """
    return 1e-12 * (1.0 + abs(log_scale))


@dataclass(frozen=True)
class AuditVerdict:
    """Outcome of one inequality check.

    Attributes:
        holds: the strict inequality was confirmed (margin > 0).  Always
            False for degenerate inputs, where equality is the true answer.
        margin: log-domain gap ln RHS - ln LHS.  Positive when the strict
            inequality holds numerically.
        degenerate: the sample was uniform, so the inequality collapses to
            equality and neither "holds" nor "fails" applies.
        tolerance: the weak-margin threshold that applied to this check.

    A verdict with ``0 < margin <= tolerance`` still reports ``holds=True``
    but exposes ``weak=True`` so callers can treat it with suspicion.
    """

    holds: bool
    margin: float
    degenerate: bool
    tolerance: float

    @property
    def weak(self) -> bool:
        """True when the inequality held by less than the noise tolerance."""
        return self.holds and self.margin <= self.tolerance

    @property
    def failed(self) -> bool:
        """True when a non-degenerate check did not hold."""
        return not self.holds and not self.degenerate


@dataclass(frozen=True)
class ParameterOrder:
    """A pair of exponent pairs satisfying the comparison hypothesis.

    Requires p > q within each pair, componentwise dominance
    (upper.p >= lower.p and upper.q >= lower.q) and strict increase in at
    least one component.  Anything else raises :class:`HypothesisError`:
    outside these conditions the monotonicity claim is simply not asserted.
    """

    lower: ExponentPair
    upper: ExponentPair

    def __post_init__(self) -> None:
        lo, up = self.lower, self.upper
        if not (lo.p > lo.q and up.p > up.q):
            raise HypothesisError(
                "each pair must have p > q strictly "
                f"(got lower=({lo.p}, {lo.q}), upper=({up.p}, {up.q}))"
            )
        if not (up.p >= lo.p and up.q >= lo.q):
            raise HypothesisError(
                "upper pair must dominate componentwise: "
                f"({up.p}, {up.q}) does not dominate ({lo.p}, {lo.q})"
            )
        if not (up.p > lo.p or up.q > lo.q):
            raise HypothesisError("at least one component must increase strictly")


def check_monotonicity(sample: PositiveSample, order: ParameterOrder) -> AuditVerdict:
    """Verify G(lower) < G(upper) for a componentwise-increased exponent pair.

    The margin is the secant-slope difference ln G(upper) - ln G(lower).
    Uniform samples give equality; they come back ``degenerate`` with margin
    exactly zero, never an error.
    """
    lo = secant_slope(sample, order.lower.p, order.lower.q)
    up = secant_slope(sample, order.upper.p, order.upper.q)
    margin = up - lo
    tolerance = strict_tolerance(max(abs(lo), abs(up)))
    if sample.is_uniform:
        return AuditVerdict(holds=False, margin=margin, degenerate=True, tolerance=tolerance)
    return AuditVerdict(
        holds=margin > 0.0, margin=margin, degenerate=False, tolerance=tolerance
    )


def check_power_mean_bound(
    sample: PositiveSample, p: float, q: float, r: float
) -> AuditVerdict:
    """Compare G(p, q) against the power mean M_r on its two valid sides.

    Exactly one bracketing applies:

    * r >= p > q with r > 0 > q: then G(p, q) < M_r, margin = ln M_r - ln G.
    * p >= r > 0 with p > q > 0: then M_r < G(p, q), margin = ln G - ln M_r.

    Any other (p, q, r) raises :class:`HypothesisError`.  Margins are the
    same secant-slope differences as :func:`check_monotonicity` applied to
    the orders ((p,q), (r,0)) resp. ((r,0), (p,q)), so the two entry points
    can never disagree.
    """
    side_low = (r >= p > q) and (r > 0.0 > q)
    side_high = (p >= r > 0.0) and (p > q > 0.0)
    if side_low == side_high:
        raise HypothesisError(
            f"(p={p}, q={q}, r={r}) fits neither bracketing of the power-mean "
            "comparison (need r >= p > q, r > 0 > q, or p >= r > 0, p > q > 0)"
        )
    gini_log = secant_slope(sample, p, q)
    power_log = secant_slope(sample, r, 0.0)
    margin = power_log - gini_log if side_low else gini_log - power_log
    tolerance = strict_tolerance(max(abs(gini_log), abs(power_log)))
    if sample.is_uniform:
        return AuditVerdict(holds=False, margin=margin, degenerate=True, tolerance=tolerance)
    return AuditVerdict(
        holds=margin > 0.0, margin=margin, degenerate=False, tolerance=tolerance
    )


def convexity_gap(sample: PositiveSample, p: float) -> float:
    """d^2/dp^2 ln S_p: the a**p-tilted variance of ln a.

    Computed by a centered second pass, so the result is nonnegative by
    construction and zero exactly for uniform samples.  Strict positivity of
    this gap for non-uniform samples is what makes every strict inequality
    in this module strict.
    """
    return log_power_sum(sample, p).moment2_centered


def scan_monotonicity(
    sample: PositiveSample, grid: Sequence[ExponentPair]
) -> list[AuditVerdict]:
    """Check every consecutive pair of a parameter grid, in order.

    The grid must be a chain: each consecutive pair of pairs has to satisfy
    the :class:`ParameterOrder` hypothesis, otherwise :class:`HypothesisError`
    is raised before any evaluation.  Verdicts come back in grid order.
    Evaluation is pure (no shared state), so callers may parallelize over
    samples; results are identical either way.
    """
    orders = [
        ParameterOrder(lower=grid[i], upper=grid[i + 1]) for i in range(len(grid) - 1)
    ]
    return [check_monotonicity(sample, order) for order in orders]
