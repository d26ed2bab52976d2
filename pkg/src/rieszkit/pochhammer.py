"""Pochhammer polynomials at complex arguments and the partial sums that
reconstruct 1/zeta(s).

P_k(x) = prod_{r=1..k} (1 - x/r) is evaluated as a plain ascending
product; phi_partial pairs the polynomials with a coefficient series
through the argument map w = (s - alpha)/beta + 1; the bound probe sweeps
|P_k(s)| over a k-range and reports the empirical constant of
|P_k(s)| <= A k^(-Re s) together with a fitted log-log slope.
"""

import math
from dataclasses import dataclass

from mpmath import mpc, mpf

from .decay import DecayFit, fit_loglog_arrays
from .params import FamilyParams
from .precision import frac_to_mpf, working_bits


@dataclass(frozen=True)
class PhiPartialSum:
    """Partial sum sum_{k<=K} c_k P_k((s - alpha)/beta + 1)."""

    s: object  # mpc
    params: FamilyParams
    K: int
    value: object  # mpc
    term_tail_estimate: object  # mpf, |c_K P_K(w)|


def as_mpc(s):
    """Coerce int/float/complex/mpf/mpc to mpc at the working precision."""
    if isinstance(s, mpc):
        return s
    if isinstance(s, complex):
        return mpc(s.real, s.imag)
    return mpc(s, 0)


def pochhammer_eval(k, x, ctx):
    """P_k(x) = prod_{r=1..k} (1 - x/r), ascending r; P_0 = 1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    with working_bits(ctx.precision_bits + 16):
        z = as_mpc(x)
        prod = mpc(1, 0)
        for r in range(1, k + 1):
            prod *= 1 - z / r
    with working_bits(ctx.precision_bits):
        return +prod


def phi_partial(s, params, K, coeffs, ctx):
    """Coefficient-weighted Pochhammer partial sum approximating 1/zeta(s).

    Terms are accumulated in ascending k with the running product for
    P_k(w), w = (s - alpha)/beta + 1.  At s = alpha the product collapses
    and the sum reduces to c_0 = 1/zeta(alpha).
    """
    if coeffs.params != params:
        raise ValueError(
            f"coefficient series was computed for {coeffs.params.label()}, "
            f"not {params.label()}")
    if coeffs.k_max < K:
        raise ValueError(f"need coefficients up to K={K}, series has "
                         f"k_max={coeffs.k_max}")
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    with working_bits(ctx.precision_bits + 16):
        sv = as_mpc(s)
        w = (sv - frac_to_mpf(params.alpha)) / frac_to_mpf(params.beta) + 1
        prod = mpc(1, 0)
        acc = coeffs.values[0] * prod
        for k in range(1, K + 1):
            prod *= 1 - w / k
            acc += coeffs.values[k] * prod
        tail = abs(coeffs.values[K] * prod)
    with working_bits(ctx.precision_bits):
        return PhiPartialSum(sv, params, K, +acc, +tail)


def pochhammer_bound_probe(s, k_range, ctx):
    """Empirical check of |P_k(s)| <= A k^(-Re s) over a k-range.

    Returns a DecayFit whose empirical_constant is the observed supremum
    of |P_k(s)| k^(Re s) and whose slope is the log-log fit of |P_k(s)|.
    A degenerate all-zero sweep (s a positive integer) reports constant 0
    and a NaN slope.
    """
    lo, hi = k_range
    if not (2 <= lo <= hi):
        raise ValueError(f"k_range must satisfy 2 <= lo <= hi, got {k_range}")
    re_s = float(as_mpc(s).real) if isinstance(s, (complex, mpc)) else float(s)
    with working_bits(ctx.precision_bits + 16):
        z = as_mpc(s)
        prod = mpc(1, 0)
        magnitudes = []
        for r in range(1, hi + 1):
            prod *= 1 - z / r
            if r >= lo:
                magnitudes.append(float(abs(prod)))
    ks = range(lo, hi + 1)
    supremum = max(m * k ** re_s for m, k in zip(magnitudes, ks))
    usable = [(k, m) for k, m in zip(ks, magnitudes) if m > 0]
    if len(usable) < 3:
        return DecayFit(
            k_window=(lo, hi), slope=math.nan, intercept=math.nan,
            residual_rms=math.nan, empirical_constant=supremum,
            slope_target=-re_s, n_masked=len(magnitudes) - len(usable))
    slope, intercept, rms = fit_loglog_arrays(
        [k for k, _ in usable], [m for _, m in usable])
    return DecayFit(
        k_window=(lo, hi), slope=slope, intercept=intercept,
        residual_rms=rms, empirical_constant=supremum, slope_target=-re_s,
        n_masked=len(magnitudes) - len(usable))
