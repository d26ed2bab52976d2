"""Power-law decay analysis of coefficient sequences.

fit_log_slope runs ordinary least squares of log|c_k| against log k;
check_decay_bound reports the minimal constant C with |c_k| <= C k^-theta
over the computed range (never a claim beyond it); and
compare_series_magnitudes counts how often a magnitude ordering chain
holds across families.  Exact zeros are excluded from log fits, with the
mask size recorded.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DecayFit:
    """Log-log slope fit plus the bound constant for a target exponent.

    empirical_constant is max over the window of |c_k| k^(-slope_target),
    so |c_k| <= empirical_constant * k^slope_target holds with equality
    somewhere in the window.
    """

    k_window: tuple
    slope: float
    intercept: float
    residual_rms: float
    empirical_constant: float
    slope_target: float
    n_masked: int = 0


@dataclass(frozen=True)
class MagnitudeOrdering:
    """Per-k verdicts for a chain |c_k(f1)| <= |c_k(f2)| <= ... on a window."""

    k_window: tuple
    ok: tuple
    fraction: float


def fit_loglog_arrays(ks, magnitudes):
    """OLS of log(magnitudes) on log(ks); returns (slope, intercept, rms)."""
    lk = np.log(np.asarray(ks, dtype=float))
    lv = np.log(np.asarray(magnitudes, dtype=float))
    design = np.column_stack([lk, np.ones_like(lk)])
    (slope, intercept), *_ = np.linalg.lstsq(design, lv, rcond=None)
    residuals = lv - (slope * lk + intercept)
    return float(slope), float(intercept), float(np.sqrt(np.mean(residuals ** 2)))


def _window_magnitudes(series, window):
    lo, hi = window
    if lo < 2:
        raise ValueError(f"window must start at k >= 2, got {window}")
    if hi > series.k_max or lo > hi:
        raise ValueError(f"window {window} outside series range "
                         f"0..{series.k_max}")
    ks, mags, masked = [], [], 0
    for k in range(lo, hi + 1):
        m = abs(series.values[k])
        if m == 0:
            masked += 1
            continue
        ks.append(k)
        mags.append(float(m))
    return ks, mags, masked


def fit_log_slope(series, window, slope_target=None):
    """Least-squares slope of log|c_k| vs log k over the window.

    slope_target, when given, also fills the empirical bound constant
    max |c_k| k^(-slope_target); by default the fitted slope itself is
    used as the target.
    """
    ks, mags, masked = _window_magnitudes(series, window)
    if len(ks) < 3:
        raise ValueError(
            f"window {window} leaves {len(ks)} usable points, need >= 3")
    slope, intercept, rms = fit_loglog_arrays(ks, mags)
    target = slope if slope_target is None else float(slope_target)
    constant = max(m * k ** -target for k, m in zip(ks, mags))
    return DecayFit(
        k_window=(window[0], window[1]), slope=slope, intercept=intercept,
        residual_rms=rms, empirical_constant=constant, slope_target=target,
        n_masked=masked)


def check_decay_bound(series, rho=None, epsilon=None):
    """Minimal constant C with |c_k| <= C k^-theta over the computed range.

    theta = (alpha - rho - epsilon)/beta, with rho/epsilon taken from the
    series parameters unless overridden.  The verdict is the caller's:
    this only reports the constant and the slope trend of the window.
    """
    params = series.params
    rho = params.rho if rho is None else rho
    epsilon = params.epsilon if epsilon is None else epsilon
    if not params.beta_finite:
        raise ValueError("check_decay_bound needs finite beta")
    theta = (params.alpha - rho - epsilon) / params.beta
    if theta <= 0:
        raise ValueError(f"decay exponent must be positive, got {theta}")
    window = (2, series.k_max)
    fit = fit_log_slope(series, window, slope_target=-float(theta))
    return fit


def compare_series_magnitudes(series_list, window):
    """Check |c_k| ordering along the given list for each k in the window.

    Returns per-k verdicts and the fraction of k where the whole chain
    holds.  All series must cover the window.
    """
    if len(series_list) < 2:
        raise ValueError("need at least two series to compare")
    lo, hi = window
    for s in series_list:
        if s.k_max < hi:
            raise ValueError(
                f"series {s.params.label()} has k_max={s.k_max} < {hi}")
    verdicts = []
    for k in range(lo, hi + 1):
        mags = [abs(s.values[k]) for s in series_list]
        verdicts.append(all(mags[i] <= mags[i + 1]
                            for i in range(len(mags) - 1)))
    fraction = sum(verdicts) / len(verdicts)
    return MagnitudeOrdering(k_window=(lo, hi), ok=tuple(verdicts),
                             fraction=fraction)
