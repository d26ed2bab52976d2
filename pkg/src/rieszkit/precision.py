"""Working-precision control for all arbitrary-precision arithmetic.

Every numerical routine in this package runs on mpmath binary floats.
mpmath keeps the active precision in a process-global context, so a
reentrant lock serializes precision-sensitive sections: calls from
several threads stay correct and bit-identical (they just don't run in
parallel).  Precision is always set explicitly per operation, never
inherited from whatever the caller left behind.
"""

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp
from mpmath.libmp import from_rational


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class InsufficientPrecisionError(ValueError):
    """Refusal to compute a value that would be cancellation noise."""

    def __init__(self, message, required_bits=None):
        super().__init__(message)
        self.required_bits = required_bits


@dataclass(frozen=True)
class PrecisionContext:
    """Precision policy: mantissa bits plus a cap on zeta series terms.

    precision_bits is the mantissa length every operation rounds to;
    max_terms bounds the number of direct terms the zeta evaluator may
    plan, as a resource guard.
    """

    precision_bits: int = 256
    max_terms: int = 1_000_000

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError(
                f"precision_bits must be >= 64, got {self.precision_bits}")
        if self.max_terms < 2:
            raise ValueError(f"max_terms must be >= 2, got {self.max_terms}")

    def with_bits(self, bits):
        """Same policy at a different mantissa length."""
        return PrecisionContext(bits, self.max_terms)


DEFAULT_CONTEXT = PrecisionContext()

_PREC_LOCK = threading.RLock()


@contextmanager
def working_bits(bits):
    """Run a block at the given mpmath precision, serialized across threads."""
    with _PREC_LOCK:
        saved = mp.prec
        mp.prec = bits
        try:
            yield
        finally:
            mp.prec = saved


def to_fraction(x):
    """Exact rational from int / float / str / Fraction.

    Floats convert to their exact binary value; strings accept both
    decimal ("3.5") and ratio ("7/2") notation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, float, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def frac_to_mpf(fr):
    """Fraction -> mpf, correctly rounded at the current working precision."""
    return mp.make_mpf(from_rational(fr.numerator, fr.denominator, mp.prec, "n"))
