"""Experiment catalog: the plotted datasets as deterministic tables.

Each experiment computes one rectangular dataset (plus plot descriptors
for the optional figure rendering).  Byte-identical output for identical
settings is part of the contract: no timestamps, fixed column order,
fixed summation orders underneath.

Catalog:
    riesz-7half-4          log-decay of c_k(7/2, 4) with tangent lines
    family-2plus3beta      c_k for alpha=(2+3*beta)/4, beta=1..6
    beta-limit             c_k(7/2, beta) flattening toward 1/zeta(7/2)-1
    poisson-approx         c_k(7/2, 4) vs its Poisson resummation
    critical-strip         log-decay of c_k for (2,2), (3,3), (4,4)
    hardy-littlewood-32-1  exponential-kernel f(k) at (3/2, 1) vs -0.07/k
    alpha-half-limit       large-beta limit values 1/zeta(alpha)-1
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction

from mpmath import log, mpf

from .coefficients import (METHOD_BINOMIAL, METHOD_MOBIUS, beta_limit_series,
                           ck_series, required_binomial_bits)
from .approximations import poisson_approx, riesz_f
from .decay import compare_series_magnitudes, fit_log_slope
from .mobius import mobius_sieve
from .params import FamilyParams
from .precision import working_bits
from .zeta import inv_zeta_minus_one


class UnknownExperimentError(ValueError):
    """Raised for names outside the catalog; carries the valid names."""

    def __init__(self, name, catalog):
        self.catalog = tuple(catalog)
        super().__init__(
            f"unknown experiment {name!r}; valid names: "
            + ", ".join(self.catalog))


@dataclass(frozen=True)
class ExperimentSpec:
    name: str
    params_list: tuple
    k_max: int
    n_max: int
    method: str
    outputs: tuple


@dataclass
class Dataset:
    """One rectangular table: ordered columns, emission metadata, plot specs."""

    name: str
    columns: dict
    meta: dict
    plots: list = field(default_factory=list)

    def n_rows(self):
        return len(next(iter(self.columns.values())))


def _family_2p3b(beta):
    return FamilyParams(Fraction(2 + 3 * beta, 4), Fraction(beta))


CATALOG = {
    "riesz-7half-4": ExperimentSpec(
        name="riesz-7half-4",
        params_list=(FamilyParams(Fraction(7, 2), 4),),
        k_max=1000, n_max=10_000, method=METHOD_MOBIUS,
        outputs=("k", "c_k", "log_k", "log_abs_ck", "log_abs_ck_logk",
                 "log_abs_ck_logk2", "tangent_m0", "tangent_m1",
                 "tangent_m2")),
    "family-2plus3beta": ExperimentSpec(
        name="family-2plus3beta",
        params_list=tuple(_family_2p3b(b) for b in range(1, 7)),
        k_max=100, n_max=0, method=METHOD_BINOMIAL,
        outputs=("k", "c_k_beta1", "c_k_beta2", "c_k_beta3", "c_k_beta4",
                 "c_k_beta5", "c_k_beta6", "reference")),
    "beta-limit": ExperimentSpec(
        name="beta-limit",
        params_list=tuple(FamilyParams(Fraction(7, 2), b)
                          for b in (4, 5, 6, 7, 20)),
        k_max=100, n_max=0, method=METHOD_BINOMIAL,
        outputs=("k", "c_k_beta4", "c_k_beta5", "c_k_beta6", "c_k_beta7",
                 "c_k_beta20", "limit")),
    "poisson-approx": ExperimentSpec(
        name="poisson-approx",
        params_list=(FamilyParams(Fraction(7, 2), 4),),
        k_max=500, n_max=10_000, method=METHOD_MOBIUS,
        outputs=("k", "c_k", "c_k_poisson")),
    "critical-strip": ExperimentSpec(
        name="critical-strip",
        params_list=(FamilyParams(2, 2), FamilyParams(3, 3, rho=Fraction(3, 4)),
                     FamilyParams(4, 4, rho=1)),
        k_max=500, n_max=0, method=METHOD_BINOMIAL,
        outputs=("k", "c_k_2_2", "c_k_3_3", "c_k_4_4", "log_k",
                 "log_abs_2_2", "log_abs_3_3", "log_abs_4_4", "tangent_2_2",
                 "tangent_3_3", "tangent_4_4", "ordering_ok")),
    "hardy-littlewood-32-1": ExperimentSpec(
        name="hardy-littlewood-32-1",
        params_list=(FamilyParams(Fraction(3, 2), 1),),
        k_max=600, n_max=400, method=METHOD_MOBIUS,
        outputs=("k", "f_k", "g_k")),
    "alpha-half-limit": ExperimentSpec(
        name="alpha-half-limit",
        params_list=(FamilyParams(Fraction(3, 2), 1),
                     FamilyParams(Fraction(7, 2), 1)),
        k_max=0, n_max=0, method=METHOD_BINOMIAL,
        outputs=("alpha", "limit_value", "abs_limit")),
}


def experiment_spec(name, k_max=None, n_max=None):
    """Catalog lookup with optional size overrides."""
    spec = CATALOG.get(name)
    if spec is None:
        raise UnknownExperimentError(name, CATALOG)
    if k_max is not None:
        spec = replace(spec, k_max=k_max)
    if n_max is not None:
        spec = replace(spec, n_max=n_max)
    return spec


def _base_meta(spec, ctx, **extra):
    meta = {
        "experiment": spec.name,
        "params": [p.label() for p in spec.params_list],
        "method": spec.method,
        "k_max": spec.k_max,
        "n_max": spec.n_max,
        "precision_bits": ctx.precision_bits,
    }
    meta.update(extra)
    return meta


def _tangent_intercept(log_abs, log_k, window_idx):
    """Intercept that makes the slope -3/4 line touch the curve from above."""
    lo, hi = window_idx
    best = None
    for i in range(lo, hi + 1):
        c = log_abs[i] + mpf(3) / 4 * log_k[i]
        if best is None or c > best:
            best = c
    return best


def _log_decay_columns(series, ctx, extra_logk_powers=0):
    """k >= 2 rows: natural logs of k and |c_k| (log k powers optional)."""
    ks = list(range(2, series.k_max + 1))
    with working_bits(ctx.precision_bits):
        log_k = [log(mpf(k)) for k in ks]
        log_abs = [[] for _ in range(extra_logk_powers + 1)]
        for i, k in enumerate(ks):
            base = log(abs(series.values[k]))
            for m in range(extra_logk_powers + 1):
                log_abs[m].append(base + m * log(log_k[i]))
    return ks, log_k, log_abs


def _run_riesz_7half_4(spec, ctx):
    params = spec.params_list[0]
    table = mobius_sieve(spec.n_max)
    series = ck_series(params, spec.k_max, METHOD_MOBIUS, ctx, table)
    ks, log_k, log_abs = _log_decay_columns(series, ctx, extra_logk_powers=2)
    fit_window = (max(2, spec.k_max // 10), spec.k_max)
    widx = (fit_window[0] - 2, fit_window[1] - 2)
    with working_bits(ctx.precision_bits):
        tangents = []
        for m in range(3):
            icpt = _tangent_intercept(log_abs[m], log_k, widx)
            tangents.append([icpt - mpf(3) / 4 * lk for lk in log_k])
    fit = fit_log_slope(series, fit_window, slope_target=-0.75)
    columns = {
        "k": ks,
        "c_k": [series.values[k] for k in ks],
        "log_k": log_k,
        "log_abs_ck": log_abs[0],
        "log_abs_ck_logk": log_abs[1],
        "log_abs_ck_logk2": log_abs[2],
        "tangent_m0": tangents[0],
        "tangent_m1": tangents[1],
        "tangent_m2": tangents[2],
    }
    meta = _base_meta(
        spec, ctx,
        truncation_tail_bound=series.truncation_tail_bound,
        fit_window=list(fit_window), fit_slope=fit.slope,
        bound_constant=fit.empirical_constant)
    plots = [
        {"file": f"{spec.name}-log-ck", "x": "log_k",
         "ys": ["log_abs_ck", "tangent_m0"], "styles": ["-", "--"],
         "xlabel": "log k", "ylabel": "log |c_k|",
         "title": "c_k(7/2,4): log decay vs slope -3/4"},
        {"file": f"{spec.name}-log-ck-logk", "x": "log_k",
         "ys": ["log_abs_ck_logk", "tangent_m1"], "styles": ["-", "--"],
         "xlabel": "log k", "ylabel": "log(|c_k| log k)",
         "title": "c_k(7/2,4): one log-power correction"},
        {"file": f"{spec.name}-log-ck-logk2", "x": "log_k",
         "ys": ["log_abs_ck_logk2", "tangent_m2"], "styles": ["-", "--"],
         "xlabel": "log k", "ylabel": "log(|c_k| (log k)^2)",
         "title": "c_k(7/2,4): two log-power corrections"},
    ]
    return Dataset(spec.name, columns, meta, plots)


def _run_family_2p3b(spec, ctx):
    ctx_bin = ctx.with_bits(
        required_binomial_bits(spec.k_max, ctx.precision_bits))
    ks = list(range(1, spec.k_max + 1))
    columns = {"k": ks}
    for params in spec.params_list:
        series = ck_series(params, spec.k_max, METHOD_BINOMIAL, ctx_bin)
        columns[f"c_k_beta{params.beta}"] = [series.values[k] for k in ks]
    with working_bits(ctx.precision_bits):
        columns["reference"] = [
            mpf("-0.4") * mpf(k) ** (mpf(-3) / 4) for k in ks]
    meta = _base_meta(spec, ctx,
                      precision_bits_effective=ctx_bin.precision_bits,
                      reference="-0.4 * k^(-3/4)")
    plots = [{
        "file": spec.name, "x": "k",
        "ys": [f"c_k_beta{p.beta}" for p in spec.params_list] + ["reference"],
        "styles": [":"] * len(spec.params_list) + ["-"],
        "xlabel": "k", "ylabel": "c_k",
        "title": "c_k((2+3b)/4, b) for b=1..6 vs -0.4 k^(-3/4)"}]
    return Dataset(spec.name, columns, meta, plots)


def _run_beta_limit(spec, ctx):
    ctx_bin = ctx.with_bits(
        required_binomial_bits(spec.k_max, ctx.precision_bits))
    ks = list(range(0, spec.k_max + 1))
    columns = {"k": ks}
    for params in spec.params_list:
        series = ck_series(params, spec.k_max, METHOD_BINOMIAL, ctx_bin)
        columns[f"c_k_beta{params.beta}"] = list(series.values)
    alpha = spec.params_list[0].alpha
    limit = inv_zeta_minus_one(alpha, ctx)
    columns["limit"] = [limit] * len(ks)
    meta = _base_meta(spec, ctx,
                      precision_bits_effective=ctx_bin.precision_bits,
                      limit_value=limit)
    plots = [{
        "file": spec.name, "x": "k",
        "ys": [f"c_k_beta{p.beta}" for p in spec.params_list] + ["limit"],
        "styles": ["-"] * len(spec.params_list) + ["--"],
        "xlabel": "k", "ylabel": "c_k",
        "title": "c_k(7/2, beta) flattening toward 1/zeta(7/2) - 1"}]
    return Dataset(spec.name, columns, meta, plots)


def _run_poisson(spec, ctx):
    params = spec.params_list[0]
    table = mobius_sieve(spec.n_max)
    source = ck_series(params, 2 * spec.k_max, METHOD_MOBIUS, ctx, table)
    ks = list(range(1, spec.k_max + 1))
    columns = {
        "k": ks,
        "c_k": [source.values[k] for k in ks],
        "c_k_poisson": [poisson_approx(source, k, ctx) for k in ks],
    }
    meta = _base_meta(spec, ctx,
                      source_k_max=source.k_max,
                      truncation_tail_bound=source.truncation_tail_bound)
    plots = [{
        "file": spec.name, "x": "k", "ys": ["c_k", "c_k_poisson"],
        "styles": ["-", "--"], "xlabel": "k", "ylabel": "c_k",
        "title": "c_k(7/2,4) vs Poisson resummation"}]
    return Dataset(spec.name, columns, meta, plots)


def _run_critical_strip(spec, ctx):
    ctx_bin = ctx.with_bits(
        required_binomial_bits(spec.k_max, ctx.precision_bits))
    labels = ["2_2", "3_3", "4_4"]
    series_list = [ck_series(p, spec.k_max, METHOD_BINOMIAL, ctx_bin)
                   for p in spec.params_list]
    ks = list(range(2, spec.k_max + 1))
    fit_window = (max(2, spec.k_max // 10), spec.k_max)
    widx = (fit_window[0] - 2, fit_window[1] - 2)
    columns = {"k": ks}
    for label, series in zip(labels, series_list):
        columns[f"c_k_{label}"] = [series.values[k] for k in ks]
    log_cols = {}
    with working_bits(ctx.precision_bits):
        log_k = [log(mpf(k)) for k in ks]
        for label, series in zip(labels, series_list):
            log_cols[label] = [log(abs(series.values[k])) for k in ks]
        columns["log_k"] = log_k
        for label in labels:
            columns[f"log_abs_{label}"] = log_cols[label]
        for label in labels:
            icpt = _tangent_intercept(log_cols[label], log_k, widx)
            columns[f"tangent_{label}"] = [
                icpt - mpf(3) / 4 * lk for lk in log_k]
    ordering_window = (min(10, spec.k_max), spec.k_max)
    ordering = compare_series_magnitudes(series_list, ordering_window)
    chain = {k: ok for k, ok in
             zip(range(ordering_window[0], ordering_window[1] + 1),
                 ordering.ok)}
    columns["ordering_ok"] = [int(chain.get(k, True)) for k in ks]
    meta = _base_meta(spec, ctx,
                      precision_bits_effective=ctx_bin.precision_bits,
                      ordering_window=list(ordering_window),
                      ordering_fraction=ordering.fraction)
    plots = []
    for label in labels:
        pair = label.replace("_", ",")
        plots.append(
            {"file": f"{spec.name}-{label}", "x": "log_k",
             "ys": [f"log_abs_{label}", f"tangent_{label}"],
             "styles": ["-", "--"], "xlabel": "log k",
             "ylabel": f"log |c_k({pair})|",
             "title": f"critical strip decay, (alpha,beta)=({pair})"})
    return Dataset(spec.name, columns, meta, plots)


def _run_hardy_littlewood(spec, ctx):
    params = spec.params_list[0]
    table = mobius_sieve(spec.n_max)
    ks = list(range(1, spec.k_max + 1))
    with working_bits(ctx.precision_bits):
        g = [mpf("-0.07") / k for k in ks]
    columns = {
        "k": ks,
        "f_k": [riesz_f(k, params, table, ctx) for k in ks],
        "g_k": g,
    }
    meta = _base_meta(spec, ctx, reference="-0.07 / k")
    plots = [{
        "file": spec.name, "x": "k", "ys": ["f_k", "g_k"],
        "styles": ["-", "--"], "xlabel": "k", "ylabel": "f(k)",
        "title": "f(k) at (3/2, 1) vs -0.07/k"}]
    return Dataset(spec.name, columns, meta, plots)


def _run_alpha_half_limit(spec, ctx):
    alphas = [p.alpha for p in spec.params_list]
    with working_bits(ctx.precision_bits):
        limits = [inv_zeta_minus_one(a, ctx) for a in alphas]
        columns = {
            "alpha": [str(a) for a in alphas],
            "limit_value": limits,
            "abs_limit": [abs(v) for v in limits],
        }
    meta = _base_meta(spec, ctx)
    return Dataset(spec.name, columns, meta, plots=[])


_BUILDERS = {
    "riesz-7half-4": _run_riesz_7half_4,
    "family-2plus3beta": _run_family_2p3b,
    "beta-limit": _run_beta_limit,
    "poisson-approx": _run_poisson,
    "critical-strip": _run_critical_strip,
    "hardy-littlewood-32-1": _run_hardy_littlewood,
    "alpha-half-limit": _run_alpha_half_limit,
}


def run_experiment(spec, ctx):
    """Produce the dataset for a catalog experiment spec."""
    builder = _BUILDERS.get(spec.name)
    if builder is None:
        raise UnknownExperimentError(spec.name, CATALOG)
    return builder(spec, ctx)
