"""Real-argument Riemann zeta via Euler-Maclaurin summation.

For real s > 1 and a cut point N,

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{j=1..v} B_{2j}/(2j)! * (s)_{2j-1} * N^(-s-2j+1) + R_v

with (s)_m the rising factorial and, for real s > 0, |R_v| bounded by
the magnitude of the first omitted correction term.  (N, v) are planned
in cheap float arithmetic so the a-priori remainder sits below the
precision target before any high-precision work starts; for large s the
plan degenerates to a couple of direct terms, which is the regime the
coefficient formulas hit at big k.  Results are cached per
(argument, precision).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lgamma, log2

from mpmath import mpf

from .bernoulli import bernoulli_over_factorial
from .precision import (DomainError, frac_to_mpf, to_fraction, working_bits)

_LOG2_2PI = log2(2 * math.pi)
_LN2 = math.log(2)


@dataclass(frozen=True)
class ZetaValue:
    """zeta(argument) with a rigorous absolute error bound."""

    argument: Fraction
    value: object  # mpf
    error_bound: object  # mpf


def _correction_log2(s, n_cut, j):
    """log2 bound of |B_{2j}/(2j)! * (s)_{2j-1} * N^(-s-2j+1)|.

    Uses |B_{2j}|/(2j)! = 2 zeta(2j)/(2pi)^{2j} <= 4/(2pi)^{2j}.
    """
    rising = (lgamma(s + 2 * j - 1) - lgamma(s)) / _LN2
    return 2.0 - 2 * j * _LOG2_2PI + rising - (s + 2 * j - 1) * log2(n_cut)

def _plan(s, prec, max_terms):
    """Pick (N, v) so the remainder bound is below 2^-(prec+10)."""
    target = -(prec + 10)
    best = None  # (cost, N, v)
    n_cut = 2
    while n_cut <= max_terms:
        if best is not None and n_cut >= best[0]:
            break
        prev = None
        v = 0
        found = None
        while v <= 4000:
            t = _correction_log2(s, n_cut, v + 1)
            if t <= target:
                found = v
                break
            if prev is not None and t >= prev:
                break  # corrections diverging: N too small for this s
            prev = t
            v += 1
        if found is not None:
            cost = n_cut + 6 * found
            if best is None or cost < best[0]:
                best = (cost, n_cut, found)
        n_cut = max(n_cut + 1, int(n_cut * 1.3))
    if best is None:
        raise ValueError(
            f"zeta({s}) at {prec} bits needs more than max_terms={max_terms} "
            f"direct terms")
    return best[1], best[2]


_CACHE = {}


def zeta_real(sigma, ctx):
    """zeta(sigma) for real sigma > 1 under the given precision context.

    The returned error_bound is |value| * 2^(8 - precision_bits), a
    conservative cover for the planned remainder plus rounding.
    """
    sig = to_fraction(sigma)
    if sig <= 1:
        raise DomainError(f"zeta_real requires sigma > 1, got {sigma}")
    prec = ctx.precision_bits
    key = (sig, prec)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit

    if sig >= prec + 2:
        # 1 + 2^-sigma + ... rounds to exactly 1 at this precision
        with working_bits(prec):
            one = mpf(1)
            err = mpf(2) ** (8 - prec)
        return ZetaValue(sig, one, err)

    n_cut, v = _plan(float(sig), prec, ctx.max_terms)
    with working_bits(prec + 32):
        s = frac_to_mpf(sig)
        acc = mpf(0)
        for n in range(1, n_cut):
            acc += mpf(n) ** -s
        big_n = mpf(n_cut)
        acc += big_n ** (1 - s) / (s - 1) + big_n ** -s / 2
        if v:
            rising = s                      # (s)_{2j-1} at j=1
            npow = big_n ** (-s - 1)        # N^(-s-2j+1) at j=1
            nstep = big_n ** -2
            for j in range(1, v + 1):
                acc += frac_to_mpf(bernoulli_over_factorial(j)) * rising * npow
                rising *= (s + (2 * j - 1)) * (s + 2 * j)
                npow *= nstep
    with working_bits(prec):
        value = +acc
        err = abs(value) * mpf(2) ** (8 - prec)
    result = ZetaValue(sig, value, err)
    _CACHE[key] = result
    return result


def zeta_mpf(sigma, ctx):
    """Cached zeta value as a bare mpf (hot path for coefficient sums)."""
    return zeta_real(sigma, ctx).value


def inv_zeta_minus_one(alpha, ctx):
    """1/zeta(alpha) - 1: the large-beta limit of c_k for k >= 1."""
    a = to_fraction(alpha)
    if a <= 1:
        raise DomainError(f"inv_zeta_minus_one requires alpha > 1, got {alpha}")
    z = zeta_real(a, ctx).value
    with working_bits(ctx.precision_bits):
        return 1 / z - 1
