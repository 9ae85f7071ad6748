"""Extended-precision reference evaluation.

This is the deliberately *naive* route: power sums are formed term by term
as exp(p * ln a_i) in arbitrary-precision arithmetic (mpmath) and the
textbook formula is applied directly.  It shares no code with the log-domain
kernel, so agreement between the two is evidence that both are right, not
that they make the same mistake.  The price is a restricted domain: inputs
are capped where 50 digits of working precision comfortably absorb the
naive formula's dynamic range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import mpmath as mp

from .errors import OracleDomainError, ParameterDomainError
from .means import gini_mean
from .sample import ExponentPair, PositiveSample

__all__ = ["OracleConfig", "oracle_gini", "equivalence_report", "EquivalenceSummary"]

#: Certified input domain of the oracle.
MAX_ABS_EXPONENT = 30.0
MIN_VALUE = 1e-30
MAX_VALUE = 1e30


@dataclass(frozen=True)
class OracleConfig:
    """Working precision and size cap for the reference evaluator.

    ``precision_digits`` must be at least 50; ``max_n`` at most 1024.  The
    defaults give results correct to well under 1 ulp of a double over the
    certified domain, verified by the self-consistency check (doubling the
    digits changes nothing after rounding to double).
    """

    precision_digits: int = 50
    max_n: int = 1024

    def __post_init__(self) -> None:
        if int(self.precision_digits) != self.precision_digits or self.precision_digits < 50:
            raise ParameterDomainError(
                f"precision_digits must be an integer >= 50, got {self.precision_digits!r}"
            )
        if int(self.max_n) != self.max_n or not 1 <= self.max_n <= 1024:
            raise ParameterDomainError(
                f"max_n must be an integer in [1, 1024], got {self.max_n!r}"
            )
        object.__setattr__(self, "precision_digits", int(self.precision_digits))
        object.__setattr__(self, "max_n", int(self.max_n))


def _check_domain(
    sample: PositiveSample, params: ExponentPair, config: OracleConfig
) -> None:
    if sample.n > config.max_n:
        raise OracleDomainError(
            f"sample size {sample.n} exceeds the oracle cap of {config.max_n}"
        )
    if max(abs(params.p), abs(params.q)) > MAX_ABS_EXPONENT:
        raise OracleDomainError(
            f"|exponents| must be <= {MAX_ABS_EXPONENT} for the oracle, "
            f"got ({params.p}, {params.q})"
        )
    if sample.min_value < MIN_VALUE or sample.max_value > MAX_VALUE:
        raise OracleDomainError(
            f"oracle accepts values in [{MIN_VALUE}, {MAX_VALUE}], "
            f"got range [{sample.min_value}, {sample.max_value}]"
        )


def oracle_gini(
    sample: PositiveSample,
    params: ExponentPair,
    config: OracleConfig = OracleConfig(),
) -> float:
    """Reference G(p, q) by the naive formula at extended precision.

    Raises :class:`OracleDomainError` outside the certified domain
    (n <= config.max_n, |p|, |q| <= 30, values in [1e-30, 1e30]).  Inside
    it, the returned double is correct to <= 2 ulp (in practice: correctly
    rounded).
    """
    _check_domain(sample, params, config)
    with mp.workdps(config.precision_digits):
        values = [mp.mpf(float(v)) for v in sample.values]
        weights = [mp.mpf(float(w)) for w in sample.weights]
        logs = [mp.log(v) for v in values]

        def power_sum(exponent: float) -> mp.mpf:
            e = mp.mpf(float(exponent))
            return mp.fsum(w * mp.exp(e * lg) for w, lg in zip(weights, logs))

        if params.p == params.q:
            p = mp.mpf(float(params.p))
            tilted = [w * mp.exp(p * lg) for w, lg in zip(weights, logs)]
            result = mp.exp(
                mp.fsum(t * lg for t, lg in zip(tilted, logs)) / mp.fsum(tilted)
            )
        else:
            ratio = power_sum(params.p) / power_sum(params.q)
            result = ratio ** (1 / (mp.mpf(float(params.p)) - mp.mpf(float(params.q))))
        return float(result)


@dataclass(frozen=True)
class EquivalenceSummary:
    """Worst-case disagreement between the fast path and the oracle."""

    cases: int
    max_rel_error: float
    worst_sample: PositiveSample | None
    worst_params: ExponentPair | None
    rel_tol: float
    passed: bool


def equivalence_report(
    samples: Sequence[PositiveSample],
    grids: Sequence[Sequence[ExponentPair]],
    config: OracleConfig = OracleConfig(),
    rel_tol: float = 1e-12,
) -> EquivalenceSummary:
    """Compare :func:`ginikit.means.gini_mean` against the oracle pointwise.

    ``grids[i]`` lists the exponent pairs to evaluate on ``samples[i]`` (a
    single shared grid may be passed as ``[grid] * len(samples)``).
    Iteration order is deterministic; the summary records the worst relative
    error and where it occurred.
    """
    if len(grids) != len(samples):
        raise ParameterDomainError(
            f"need one grid per sample, got {len(grids)} grids for {len(samples)} samples"
        )
    worst = 0.0
    worst_sample: PositiveSample | None = None
    worst_params: ExponentPair | None = None
    cases = 0
    for sample, grid in zip(samples, grids):
        for params in grid:
            fast = gini_mean(sample, params)
            reference = oracle_gini(sample, params, config)
            rel = abs(fast - reference) / reference
            cases += 1
            if rel > worst:
                worst = rel
                worst_sample = sample
                worst_params = params
    return EquivalenceSummary(
        cases=cases,
        max_rel_error=worst,
        worst_sample=worst_sample,
        worst_params=worst_params,
        rel_tol=rel_tol,
        passed=worst <= rel_tol,
    )
