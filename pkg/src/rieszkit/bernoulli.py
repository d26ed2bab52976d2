"""Exact Bernoulli numbers for the Euler-Maclaurin tail corrections.

Only even indices are needed (odd B_n vanish for n >= 3 and B_1 never
enters the tail), so the binomial recurrence runs over even indices with
the B_1 = -1/2 contribution folded in as a constant.  Values are exact
Fractions, computed once and kept for the life of the process.
"""

import threading
from fractions import Fraction
from math import comb, factorial

_B_EVEN = [Fraction(1)]  # B_0, B_2, B_4, ... by half-index
_LOCK = threading.Lock()


def bernoulli_even(m):
    """B_{2m} as an exact Fraction."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m >= len(_B_EVEN):
        with _LOCK:
            while len(_B_EVEN) <= m:
                n = 2 * len(_B_EVEN)
                s = Fraction(-(n + 1), 2)  # C(n+1,1) * B_1
                for j, bj in enumerate(_B_EVEN):
                    s += comb(n + 1, 2 * j) * bj
                _B_EVEN.append(-s / (n + 1))
    return _B_EVEN[m]


_B_OVER_FACT = {}


def bernoulli_over_factorial(m):
    """B_{2m}/(2m)! as an exact Fraction, the Euler-Maclaurin weight."""
    got = _B_OVER_FACT.get(m)
    if got is None:
        got = bernoulli_even(m) / factorial(2 * m)
        _B_OVER_FACT[m] = got
    return got
