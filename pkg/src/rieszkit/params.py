"""The two-parameter family (alpha, beta) with decay-bound bookkeeping.

alpha is the Dirichlet exponent, beta the compression rate of the kernel
(1 - n^-beta)^k; rho is the abscissa of the half-plane a decay bound
speaks about and epsilon its slack.  beta = math.inf selects the
large-beta limit, where the coefficients freeze at 1/zeta(alpha) - 1.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .precision import to_fraction


@dataclass(frozen=True)
class FamilyParams:
    alpha: object
    beta: object
    rho: object = Fraction(1, 2)
    epsilon: object = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", to_fraction(self.alpha))
        if not (isinstance(self.beta, float) and math.isinf(self.beta)):
            object.__setattr__(self, "beta", to_fraction(self.beta))
        object.__setattr__(self, "rho", to_fraction(self.rho))
        object.__setattr__(self, "epsilon", to_fraction(self.epsilon))
        if not self.beta > 0:
            raise ValueError(f"beta must be > 0, got {self.beta}")
        if self.rho < Fraction(1, 2):
            raise ValueError(f"rho must be >= 1/2, got {self.rho}")
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")

    @property
    def beta_finite(self):
        return not (isinstance(self.beta, float) and math.isinf(self.beta))

    def decay_exponent(self):
        """(alpha - rho - epsilon)/beta, the k-power in the decay bound."""
        if not self.beta_finite:
            return Fraction(0)
        return (self.alpha - self.rho - self.epsilon) / self.beta

    def label(self):
        beta = self.beta if self.beta_finite else "inf"
        return f"alpha={self.alpha},beta={beta}"
