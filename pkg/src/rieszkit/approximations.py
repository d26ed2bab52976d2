"""Companion evaluations around the coefficient family.

psi_eval sums the entire alternating series sum_k (-x)^k/(k! zeta(a+bk)).
Its partial sums swing up to e^x before collapsing to a small result, so
the accumulator runs with an extra x*log2(e) + 64 bits while each zeta
value is evaluated only as accurately as its own term needs (the terms
far from k ~ x carry far less weight, which keeps the expensive
small-sigma zeta evaluations at moderate precision).

poisson_approx resums precomputed coefficients against Poisson weights
k^p/p! e^-k over the window p <= 2k; riesz_f is the exponential-kernel
Moebius sum that the alternating series collapses to; qk_direct /
qk_beta_asymptotic give the positive-term envelope and its Beta-function
asymptotics.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lgamma

from mpmath import exp, gamma, loggamma, mpf

from .coefficients import _family_factors, _require_series_domain
from .params import FamilyParams
from .precision import frac_to_mpf, to_fraction, working_bits
from .zeta import zeta_real

_LOG2_E = math.log2(math.e)
_LN2 = math.log(2)


@dataclass(frozen=True)
class PsiEvaluation:
    x: Fraction
    params: FamilyParams
    value: object  # mpf
    terms_used: int


def psi_eval(x, params, ctx):
    """Evaluate sum_{k>=0} (-1)^k x^k / (k! zeta(alpha + beta k)).

    Summation stops once the term majorant x^(K+1)/(K+1)! falls below
    2^-precision_bits of the running partial sum (and the factorial has
    taken over, k+1 > x).  The majorant ignores the 1/zeta factors, which
    are < 1, so it only ever overshoots the true terms.
    """
    _require_series_domain(params, "psi_eval")
    xf = to_fraction(x)
    if xf < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    base = ctx.precision_bits
    if xf == 0:
        value = 1 / zeta_real(params.alpha, ctx).value
        with working_bits(base):
            return PsiEvaluation(xf, params, +value, 1)

    x_float = float(xf)
    uplift = math.ceil(x_float * _LOG2_E) + 64
    with working_bits(base + uplift + 32):
        xm = frac_to_mpf(xf)
        acc = mpf(0)
        power = mpf(1)  # x^k / k!
        stop_scale = mpf(2) ** -base
        k = 0
        while True:
            term_log2 = ((k * math.log(x_float) - lgamma(k + 1)) / _LN2
                         if k > 0 else 0.0)
            zeta_bits = base + max(0, math.ceil(term_log2)) + 64
            z = zeta_real(params.alpha + params.beta * k,
                          ctx.with_bits(zeta_bits)).value
            if k % 2 == 0:
                acc += power / z
            else:
                acc -= power / z
            power = power * xm / (k + 1)
            k += 1
            if k > x_float and power < stop_scale * abs(acc):
                break
            if k > ctx.max_terms:
                raise ValueError(
                    f"psi_eval at x={x_float} exceeded max_terms="
                    f"{ctx.max_terms}")
    with working_bits(base):
        return PsiEvaluation(xf, params, +acc, k)


def poisson_approx(source, k, ctx):
    """Resum a coefficient series against Poisson weights at mean k.

    Computes sum_{p=0..2k} c_p k^p/p! e^-k.  Working precision is raised
    by k*log2(e) + 64 bits to absorb the e^-k scale against the k^p/p!
    peak near p = k.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if source.k_max < 2 * k:
        raise ValueError(
            f"poisson_approx at k={k} needs a source series with "
            f"k_max >= {2 * k}, got {source.k_max}")
    bits = ctx.precision_bits + math.ceil(k * _LOG2_E) + 64
    with working_bits(bits):
        weight = exp(mpf(-k))
        acc = mpf(0)
        for p in range(2 * k + 1):
            acc += source.values[p] * weight
            weight = weight * k / (p + 1)
    with working_bits(ctx.precision_bits):
        return +acc


def riesz_f(k, params, table, ctx):
    """Exponential-kernel Moebius sum: sum_n mu(n) n^-alpha e^(-k/n^beta).

    Truncated at table.limit, ascending n.  This is the x = k value of
    the entire series psi_eval computes, with the same truncation caveat
    as ck_mobius.
    """
    _require_series_domain(params, "riesz_f")
    kf = to_fraction(k)
    if kf < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    weights, kernels = _family_factors(params, table, ctx.precision_bits)
    with working_bits(ctx.precision_bits):
        km = frac_to_mpf(kf)
        total = mpf(0)
        for w, q in zip(weights, kernels):
            total += w * exp(-km * q)
        return +total


# Positive-term envelope: cached n^-alpha / n^-beta over all n <= N.
_QK_CACHE = {}
_QK_KEEP = 2


def _qk_factors(params, n_max, bits):
    key = (params.alpha, params.beta, n_max, bits)
    got = _QK_CACHE.get(key)
    if got is None:
        with working_bits(bits):
            a_mpf = frac_to_mpf(params.alpha)
            b_mpf = frac_to_mpf(params.beta)
            weights = []
            kernels = []
            for n in range(1, n_max + 1):
                nm = mpf(n)
                weights.append(nm ** -a_mpf)
                kernels.append(nm ** -b_mpf)
        got = (weights, kernels)
        _QK_CACHE[key] = got
        while len(_QK_CACHE) > _QK_KEEP:
            _QK_CACHE.pop(next(iter(_QK_CACHE)))
    return got


def qk_direct(params, k, n_max, ctx):
    """Positive-term envelope sum_{n<=N} n^-alpha (1 - n^-beta)^k.

    The dropped tail is below N^(1-alpha)/(alpha-1), as for the signed
    series.
    """
    _require_series_domain(params, "qk_direct")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    weights, kernels = _qk_factors(params, n_max, ctx.precision_bits)
    with working_bits(ctx.precision_bits):
        total = mpf(0)
        for w, q in zip(weights, kernels):
            total += w * (1 - q) ** k
        return +total


def qk_beta_asymptotic(params, k, ctx, simplified=False):
    """Beta-function asymptote of the positive-term envelope.

    Returns (1/beta) B(lambda, k+1) with lambda = (alpha-1)/beta, via the
    Gamma ratio B(l, m) = Gamma(l) Gamma(m) / Gamma(l+m) evaluated in log
    space.  With simplified=True returns the large-k power law
    (Gamma(lambda)/beta) k^-lambda instead.
    """
    _require_series_domain(params, "qk_beta_asymptotic")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    lam = (params.alpha - 1) / params.beta
    with working_bits(ctx.precision_bits):
        lam_mpf = frac_to_mpf(lam)
        beta_mpf = frac_to_mpf(params.beta)
        if simplified:
            return +(gamma(lam_mpf) / beta_mpf * mpf(k) ** -lam_mpf)
        log_ratio = (loggamma(lam_mpf) + loggamma(mpf(k + 1))
                     - loggamma(lam_mpf + k + 1))
        return +(exp(log_ratio) / beta_mpf)
