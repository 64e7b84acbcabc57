# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels; see kernels.py for the pure fallback."""

from libc.stdlib cimport llabs


def prism_sweep(long long b_lo, long long b_hi, long long x_lo, long long x_hi):
    """Exhaustive check of the equal-order dichotomy for (b; 1/2, 1/2, y/x).

    Loops over odd x in [x_lo, x_hi], b, b' in [b_lo, b_hi], 0 < y, y' < x.
    Returns (cases, equal, same, reversing, failures, first_failure).
    """
    cdef long long x, b, b2, y, y2, o1, o2
    cdef long long cases = 0, equal = 0, same = 0, reversing = 0, failures = 0
    first = None
    if x_lo % 2 == 0:
        x_lo += 1
    if x_lo < 3:
        x_lo = 3
    x = x_lo
    while x <= x_hi:
        for b in range(b_lo, b_hi + 1):
            for y in range(1, x):
                o1 = 4 * llabs((b + 1) * x + y)
                for b2 in range(b_lo, b_hi + 1):
                    for y2 in range(1, x):
                        cases += 1
                        o2 = 4 * llabs((b2 + 1) * x + y2)
                        if o1 != o2:
                            continue
                        equal += 1
                        if b == b2 and y == y2:
                            same += 1
                        elif b + b2 == -3 and y + y2 == x:
                            reversing += 1
                        else:
                            failures += 1
                            if first is None:
                                first = (b, b2, x, y, y2)
        x += 2
    return cases, equal, same, reversing, failures, first
