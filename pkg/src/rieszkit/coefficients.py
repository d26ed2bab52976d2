"""The coefficient family c_k(alpha, beta) by two independent routes.

Route one truncates the signed series over integers,
sum_n mu(n) n^-alpha (1 - n^-beta)^k, summed in ascending n with the
dropped tail majorized by N^(1-alpha)/(alpha-1).  Route two combines
reciprocal zeta values with alternating binomial weights; it has no
truncation error but burns roughly one mantissa bit per unit of k to
cancellation (the weights peak near 2^k while the sum decays like a
small power of k), so it refuses to run below a k + 64 bit floor and
double-checks after the fact that at least 48 trusted bits survived.
The two routes compute the same number and so audit each other.
"""

import math
import threading
from dataclasses import dataclass

from mpmath import mpf

from .params import FamilyParams
from .precision import (DomainError, InsufficientPrecisionError,
                        frac_to_mpf, to_fraction, working_bits)
from .zeta import zeta_mpf, zeta_real

METHOD_MOBIUS = "mobius"
METHOD_BINOMIAL = "binomial-zeta"
METHOD_BETA_LIMIT = "beta-limit"

DEFAULT_N_MAX = 10_000
TRUSTED_BITS_FLOOR = 48


@dataclass(frozen=True)
class CoefficientSeries:
    """c_0..c_{k_max} for fixed (alpha, beta), with provenance."""

    params: FamilyParams
    k_max: int
    values: tuple
    method: str
    precision_bits_used: int
    truncation_tail_bound: object  # mpf for the mobius route, else None
    n_max: int = None

    def __len__(self):
        return self.k_max + 1

    def __getitem__(self, k):
        return self.values[k]


def _require_series_domain(params, op_name):
    if not params.beta_finite:
        raise DomainError(f"{op_name} requires finite beta")
    if params.alpha <= 1:
        raise DomainError(
            f"{op_name} requires alpha > 1 (series not absolutely "
            f"convergent), got alpha={params.alpha}")


def mobius_tail_bound(params, n_max, ctx):
    """N^(1-alpha)/(alpha-1): majorant for the dropped n > N terms.

    Conservative: it ignores the (1 - n^-beta)^k damping, which only
    shrinks the tail further.
    """
    _require_series_domain(params, "mobius_tail_bound")
    with working_bits(ctx.precision_bits):
        a = frac_to_mpf(params.alpha)
        return mpf(n_max) ** (1 - a) / (a - 1)


# Per-n factors mu(n) * n^-alpha and n^-beta over squarefree n, shared by
# the truncated-series routes.  The sieve is deterministic, so
# (alpha, beta, limit, bits) pins the arrays exactly.
_FACTORS_CACHE = {}
_FACTORS_LOCK = threading.Lock()
_FACTORS_KEEP = 6


def _family_factors(params, table, bits):
    key = (params.alpha, params.beta, table.limit, bits)
    got = _FACTORS_CACHE.get(key)
    if got is None:
        ns, mus = table.nonzero()
        with working_bits(bits):
            a_mpf = frac_to_mpf(params.alpha)
            b_mpf = frac_to_mpf(params.beta)
            weights = []
            kernels = []
            for n, m in zip(ns.tolist(), mus.tolist()):
                nm = mpf(n)
                weights.append(m * nm ** -a_mpf)
                kernels.append(nm ** -b_mpf)
        got = (weights, kernels)
        with _FACTORS_LOCK:
            _FACTORS_CACHE[key] = got
            while len(_FACTORS_CACHE) > _FACTORS_KEEP:
                _FACTORS_CACHE.pop(next(iter(_FACTORS_CACHE)))
    return got


def ck_mobius(params, k, table, ctx):
    """c_k by the truncated Moebius-weighted series, ascending n.

    The dropped tail is bounded by mobius_tail_bound(params, table.limit).
    """
    _require_series_domain(params, "ck_mobius")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if table.limit < 2:
        raise ValueError(f"table.limit must be >= 2, got {table.limit}")
    weights, kernels = _family_factors(params, table, ctx.precision_bits)
    with working_bits(ctx.precision_bits):
        total = mpf(0)
        for w, q in zip(weights, kernels):
            total += w * (1 - q) ** k
        return +total


def alternating_binomial_sum(k, values):
    """sum_{j=0..k} (-1)^j C(k,j) values[j], exact for exact inputs.

    The binomial weights are built incrementally in integer arithmetic;
    feeding k+1 identical values returns exactly 0 for k >= 1.
    """
    if len(values) < k + 1:
        raise ValueError(f"need k+1={k + 1} values, got {len(values)}")
    acc = 0
    weight = 1
    for j in range(k + 1):
        if j % 2 == 0:
            acc = acc + weight * values[j]
        else:
            acc = acc - weight * values[j]
        weight = weight * (k - j) // (j + 1)
    return acc


def ck_binomial(params, k, ctx):
    """c_k as the alternating binomial combination of 1/zeta values.

    Exact for the infinite series (no truncation), which makes it the
    oracle for ck_mobius.  Refuses to run with fewer than k + 64 mantissa
    bits, and raises after the fact if cancellation left fewer than 48
    trusted bits in the result.
    """
    _require_series_domain(params, "ck_binomial")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    floor = k + 64
    bits = ctx.precision_bits
    if bits < floor:
        raise InsufficientPrecisionError(
            f"ck_binomial at k={k} needs >= {floor} bits, context has {bits}",
            required_bits=floor)
    with working_bits(bits):
        acc = mpf(0)
        magnitude = mpf(0)
        weight = 1
        for j in range(k + 1):
            z = zeta_mpf(params.alpha + params.beta * j, ctx)
            term = mpf(weight) / z
            if j % 2 == 0:
                acc += term
            else:
                acc -= term
            magnitude += term
            weight = weight * (k - j) // (j + 1)
        if acc == 0 or magnitude / abs(acc) > mpf(2) ** (bits - TRUSTED_BITS_FLOOR):
            raise InsufficientPrecisionError(
                f"ck_binomial at k={k}: cancellation left fewer than "
                f"{TRUSTED_BITS_FLOOR} trusted bits at {bits}-bit precision",
                required_bits=bits + TRUSTED_BITS_FLOOR)
        return +acc


def required_binomial_bits(k_max, base=256):
    """Smallest context precision at which ck_binomial accepts k <= k_max."""
    return max(base, k_max + 64)


def ck_series(params, k_max, method, ctx, table=None):
    """Batch driver: c_0..c_{k_max}, each entry computed independently.

    Entries are bit-identical to per-k calls of the underlying operation
    under the same context, so batches are reproducible entry by entry.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    if method == METHOD_MOBIUS:
        if table is None:
            raise ValueError("mobius method requires a MobiusTable")
        values = tuple(ck_mobius(params, k, table, ctx)
                       for k in range(k_max + 1))
        return CoefficientSeries(
            params=params, k_max=k_max, values=values, method=method,
            precision_bits_used=ctx.precision_bits,
            truncation_tail_bound=mobius_tail_bound(params, table.limit, ctx),
            n_max=table.limit)
    if method == METHOD_BINOMIAL:
        values = tuple(ck_binomial(params, k, ctx) for k in range(k_max + 1))
        return CoefficientSeries(
            params=params, k_max=k_max, values=values, method=method,
            precision_bits_used=ctx.precision_bits,
            truncation_tail_bound=None, n_max=None)
    raise ValueError(f"unknown method {method!r}; "
                     f"expected {METHOD_MOBIUS!r} or {METHOD_BINOMIAL!r}")


def beta_limit_series(alpha, k_max, ctx):
    """The exact large-beta limit: c_0 = 1/zeta(alpha), c_k = c_0 - 1 after.

    For k >= 1 the alternating binomial weights cancel all the constant
    terms, leaving 1/zeta(alpha) - 1 independent of k.
    """
    a = to_fraction(alpha)
    if a <= 1:
        raise DomainError(f"beta_limit_series requires alpha > 1, got {alpha}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    z = zeta_real(a, ctx).value
    with working_bits(ctx.precision_bits):
        c0 = 1 / z
        rest = c0 - 1
    values = (c0,) + (rest,) * k_max
    return CoefficientSeries(
        params=FamilyParams(a, math.inf), k_max=k_max, values=values,
        method=METHOD_BETA_LIMIT, precision_bits_used=ctx.precision_bits,
        truncation_tail_bound=None, n_max=None)
