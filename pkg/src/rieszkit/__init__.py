"""High-precision machinery for generalized Riesz/Hardy-Littlewood
coefficient sequences and the Pochhammer-polynomial reconstruction of
1/zeta(s): coefficient families c_k(alpha, beta), their Poisson
resummation, exponential-kernel forms, positive-term envelopes, and
power-law decay analysis, plus a catalog of plot-ready experiment
datasets."""

__version__ = "0.1.0"

from .precision import (DEFAULT_CONTEXT, DomainError,
                        InsufficientPrecisionError, PrecisionContext)
from .mobius import MobiusTable, mobius_sieve
from .zeta import ZetaValue, inv_zeta_minus_one, zeta_real
from .params import FamilyParams
from .coefficients import (METHOD_BINOMIAL, METHOD_BETA_LIMIT, METHOD_MOBIUS,
                           CoefficientSeries, alternating_binomial_sum,
                           beta_limit_series, ck_binomial, ck_mobius,
                           ck_series, mobius_tail_bound,
                           required_binomial_bits)
from .approximations import (PsiEvaluation, poisson_approx, psi_eval,
                             qk_beta_asymptotic, qk_direct, riesz_f)
from .pochhammer import (PhiPartialSum, phi_partial, pochhammer_bound_probe,
                         pochhammer_eval)
from .decay import (DecayFit, MagnitudeOrdering, check_decay_bound,
                    compare_series_magnitudes, fit_log_slope)
from .experiments import (CATALOG, Dataset, ExperimentSpec,
                          UnknownExperimentError, experiment_spec,
                          run_experiment)

__all__ = [
    "CATALOG", "CoefficientSeries", "Dataset", "DecayFit", "DEFAULT_CONTEXT",
    "DomainError", "ExperimentSpec", "FamilyParams",
    "InsufficientPrecisionError", "MagnitudeOrdering", "METHOD_BETA_LIMIT",
    "METHOD_BINOMIAL", "METHOD_MOBIUS", "MobiusTable", "PhiPartialSum",
    "PrecisionContext", "PsiEvaluation", "UnknownExperimentError",
    "ZetaValue", "alternating_binomial_sum", "beta_limit_series",
    "check_decay_bound", "ck_binomial", "ck_mobius", "ck_series",
    "compare_series_magnitudes", "experiment_spec", "fit_log_slope",
    "inv_zeta_minus_one", "mobius_sieve", "mobius_tail_bound",
    "phi_partial", "pochhammer_bound_probe", "pochhammer_eval",
    "poisson_approx", "psi_eval", "qk_beta_asymptotic", "qk_direct",
    "required_binomial_bits", "riesz_f", "run_experiment", "zeta_real",
]
