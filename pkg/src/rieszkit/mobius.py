"""Moebius function table built by an Eratosthenes-style sieve.

mu(1) = 1, mu(n) = (-1)^r for n a product of r distinct primes, and
mu(n) = 0 whenever a square divides n.  The table is a read-only array
of signed bytes, deterministic for a given limit.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MobiusTable:
    """mu(n) for 1 <= n <= limit; index 0 is unused and holds 0."""

    limit: int
    values: np.ndarray

    def mu(self, n):
        if not 1 <= n <= self.limit:
            raise IndexError(f"n={n} outside table range 1..{self.limit}")
        return int(self.values[n])

    def mertens(self):
        """Cumulative sums M(x) = sum_{n<=x} mu(n), indexed 0..limit."""
        return np.cumsum(self.values, dtype=np.int64)

    def nonzero(self):
        """(n, mu(n)) arrays over the squarefree n <= limit, ascending."""
        ns = np.nonzero(self.values)[0]
        return ns, self.values[ns]


def mobius_sieve(limit):
    """Sieve mu(n) for 1 <= n <= limit.

    For each prime p the sign of every multiple of p is flipped and every
    multiple of p^2 is zeroed; primality falls out of the same pass.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    composite = np.zeros(limit + 1, dtype=bool)
    for p in range(2, limit + 1):
        if composite[p]:
            continue
        composite[p * p::p] = True
        mu[p::p] *= -1
        if p * p <= limit:
            mu[p * p::p * p] = 0
    mu.setflags(write=False)
    return MobiusTable(limit, mu)
