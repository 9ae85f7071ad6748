"""Pure-Python accumulation kernel.

This mirrors the compiled extension ``ginikit._kernels`` operation for
operation: same Neumaier compensation branches, same association order in
every product, same libm ``exp``.  Keeping the two implementations
bit-identical is a hard requirement (golden CLI output must not depend on
which backend got selected), so any edit here must be replayed in the
``.pyx`` file and vice versa.
"""

from __future__ import annotations

import math


def exp_moments(
    exponents: "list[float] | object", logs: "list[float] | object", shift: float
) -> tuple[float, float, float]:
    """Compensated moment sums of the weights u_i = exp(exponents[i] - shift).

    Returns ``(total, mean, variance)`` where ``total = sum(u)``, ``mean`` is
    the u-weighted average of ``logs`` and ``variance`` the u-weighted average
    of ``(logs - mean)**2`` (one centered second pass, so it is nonnegative by
    construction).  Inputs must already be sorted; summation runs strictly in
    array order.
    """
    exps = exponents.tolist() if hasattr(exponents, "tolist") else list(exponents)
    lgs = logs.tolist() if hasattr(logs, "tolist") else list(logs)

    u: list[float] = []
    s = 0.0
    c = 0.0
    for e in exps:
        x = math.exp(e - shift)
        u.append(x)
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    total = s + c

    s = 0.0
    c = 0.0
    for x, lg in zip(u, lgs):
        y = x * lg
        t = s + y
        if abs(s) >= abs(y):
            c += (s - t) + y
        else:
            c += (y - t) + s
        s = t
    mean = (s + c) / total

    s = 0.0
    c = 0.0
    for x, lg in zip(u, lgs):
        d = lg - mean
        y = x * d * d
        t = s + y
        if abs(s) >= abs(y):
            c += (s - t) + y
        else:
            c += (y - t) + s
        s = t
    variance = (s + c) / total

    return total, mean, variance
