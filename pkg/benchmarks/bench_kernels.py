"""Benchmark the compiled accumulation kernel against the pure-Python twin.

Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py

Both backends are imported directly (ignoring GINIKIT_PURE) and timed on
identical presorted inputs across a range of sample sizes.  The script also
asserts bit-identical outputs while it goes, so a drifting backend fails
loudly rather than reporting a meaningless speedup.
"""

from __future__ import annotations

import time

import numpy as np

from ginikit._backend import available_backends


def make_case(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray, float]:
    log_values = rng.uniform(-14.0, 14.0, n)
    p = rng.uniform(-50.0, 50.0)
    log_weights = rng.uniform(-2.0, 2.0, n)
    t = p * log_values + log_weights
    shift = float(t.max())
    order = np.lexsort((log_values, t))
    return (
        np.ascontiguousarray(t[order]),
        np.ascontiguousarray(log_values[order]),
        shift,
    )


def bench(fn, cases, repeats: int) -> tuple[float, list[tuple[float, float, float]]]:
    best = float("inf")
    results: list[tuple[float, float, float]] = []
    for _ in range(repeats):
        start = time.perf_counter()
        results = [fn(t, la, m) for (t, la, m) in cases]
        best = min(best, time.perf_counter() - start)
    return best, results


def main() -> None:
    impls = available_backends()
    if "compiled" not in impls:
        print("compiled backend not available; nothing to compare")
        return

    rng = np.random.default_rng(2024)
    print(f"{'n':>8} {'cases':>7} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for n, cases_count in ((4, 4000), (16, 2000), (64, 1000), (256, 400), (4096, 50)):
        cases = [make_case(rng, n) for _ in range(cases_count)]
        t_py, r_py = bench(impls["python"].exp_moments, cases, repeats=3)
        t_c, r_c = bench(impls["compiled"].exp_moments, cases, repeats=3)
        if r_py != r_c:
            raise AssertionError(f"backends disagree at n={n}")
        print(
            f"{n:>8} {cases_count:>7} {t_py * 1e3:>10.2f}ms {t_c * 1e3:>10.2f}ms "
            f"{t_py / t_c:>8.1f}x"
        )
    print("outputs bit-identical across backends for every case")


if __name__ == "__main__":
    main()
