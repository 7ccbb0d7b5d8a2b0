"""Exact evaluation of truncated Gauss sums and pulse phase schedules.

The factor signal behind both measurement schemes is the normalized
truncated sum

    A(j) = (1/(M+1)) * sum_{m=0..M} exp(i * 2*pi * m**e * N / j)

with exponent e = 2 by default.  Only the residues (m**e * N) mod j matter,
so everything is computed in exact integer arithmetic with term-by-term
modular reduction; evaluating 2*pi*m**2*N/j in floating point would lose
the fractional part entirely once m**2*N grows past 2**53.
"""

import cmath
import math
from dataclasses import dataclass

MAX_TERMS = 10**6


class ConfigurationError(ValueError):
    """Parameter combination the simulator refuses to run."""


@dataclass(frozen=True)
class FactorizationTarget:
    """Number to factor plus the exponent applied to the pulse index."""

    n: int
    exponent: int = 2

    def __post_init__(self):
        if self.n < 2:
            raise ConfigurationError(f"N must be an integer >= 2 (got {self.n})")
        if self.exponent < 1:
            raise ConfigurationError(
                f"exponent must be an integer >= 1 (got {self.exponent})"
            )


@dataclass(frozen=True)
class PhaseSchedule:
    """Pulse phases for one trial factor.

    residues[m] = (m**e * N) mod j and phases[m] = 2*pi*residues[m]/j,
    for m = 0..truncation.  A factor j makes every residue zero.
    """

    j: int
    truncation: int
    residues: tuple[int, ...]
    phases: tuple[float, ...]


@dataclass(frozen=True)
class GaussSumValue:
    """One truncated, normalized Gauss sum; magnitude lies in [0, 1]."""

    re: float
    im: float

    @property
    def magnitude(self) -> float:
        return math.hypot(self.re, self.im)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


def phase_schedule(target: FactorizationTarget, j: int, truncation: int) -> PhaseSchedule:
    """Residues and pulse phases for trial factor j, truncated to M+1 terms.

    pow(m, e, j) reduces every intermediate modulo j, so the product
    m**e * N is never materialized even for very large N.
    """
    if j < 1:
        raise ConfigurationError(f"trial factor j must be >= 1 (got {j})")
    if truncation < 0:
        raise ConfigurationError(f"truncation M must be >= 0 (got {truncation})")
    if truncation + 1 > MAX_TERMS:
        raise ConfigurationError(
            f"M+1 = {truncation + 1} pulses exceeds the {MAX_TERMS}-term cap"
        )
    n_mod = target.n % j
    residues = tuple(
        pow(m, target.exponent, j) * n_mod % j for m in range(truncation + 1)
    )
    two_pi = 2.0 * math.pi
    phases = tuple(two_pi * r / j for r in residues)
    return PhaseSchedule(j=j, truncation=truncation, residues=residues, phases=phases)


def gauss_sum_exact(target: FactorizationTarget, j: int, truncation: int) -> GaussSumValue:
    """Direct summation of the truncated sum from exact residues.

    For a factor j every phase is exactly 0.0 and the result is exactly
    1 + 0i; otherwise the magnitude is strictly below 1.
    """
    sched = phase_schedule(target, j, truncation)
    total = 0j
    for phi in sched.phases:
        total += cmath.exp(1j * phi)
    total /= truncation + 1
    return GaussSumValue(re=total.real, im=total.imag)


def is_exact_factor(n: int, j: int) -> bool:
    """Arithmetic ground truth: does j divide n."""
    if j < 1:
        raise ConfigurationError(f"trial factor j must be >= 1 (got {j})")
    return n % j == 0
