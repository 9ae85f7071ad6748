# cython: language_level=3
"""Compiled accumulation kernel.

Bit-identical twin of ``ginikit._kernels_py``: same Neumaier compensation
branches, same association order, libm ``exp``.  Built with
``-ffp-contract=off`` so no FMA contraction can change the roundings.
Any edit here must be replayed in the pure-Python file and vice versa.
"""

from libc.math cimport exp, fabs
from libc.stdlib cimport free, malloc


def exp_moments(const double[::1] exponents, const double[::1] logs, double shift):
    """Compensated moment sums of the weights u_i = exp(exponents[i] - shift).

    Returns ``(total, mean, variance)``; see the pure-Python twin for the
    exact contract.  Inputs must be contiguous, equal-length and pre-sorted.
    """
    cdef Py_ssize_t n = exponents.shape[0]
    if logs.shape[0] != n:
        raise ValueError("exponents and logs must have equal length")

    cdef double* u = <double*> malloc(n * sizeof(double))
    if u == NULL:
        raise MemoryError()

    cdef double s, c, x, t, y, d, total, mean, variance
    cdef Py_ssize_t i

    try:
        s = 0.0
        c = 0.0
        for i in range(n):
            x = exp(exponents[i] - shift)
            u[i] = x
            t = s + x
            if fabs(s) >= fabs(x):
                c += (s - t) + x
            else:
                c += (x - t) + s
            s = t
        total = s + c

        s = 0.0
        c = 0.0
        for i in range(n):
            y = u[i] * logs[i]
            t = s + y
            if fabs(s) >= fabs(y):
                c += (s - t) + y
            else:
                c += (y - t) + s
            s = t
        mean = (s + c) / total

        s = 0.0
        c = 0.0
        for i in range(n):
            d = logs[i] - mean
            y = u[i] * d * d
            t = s + y
            if fabs(s) >= fabs(y):
                c += (s - t) + y
            else:
                c += (y - t) + s
            s = t
        variance = (s + c) / total
    finally:
        free(u)

    return total, mean, variance
