"""The two simulated measurement schemes that turn a phase schedule into a
scalar factor signal.

Differential excitation
    Starting from z polarization, a cascade of M+1 weak pulses is applied,
    all with the same small flip angle theta (default 1 degree) but with
    pulse m tipped about the in-plane axis at angle phi_m.  For a factor
    all axes coincide and the small rotations accumulate; otherwise the
    axis direction is effectively randomized and the transverse signal
    stays near zero.  The readout is normalized against a reference run
    with every phase set to zero, computed through the identical code
    path, so a factor yields exactly 1.0.

Spatial averaging
    Transverse magnetization is first dephased by a gradient, modeled as
    n_slices sub-ensembles whose z-rotation angles cover a whole number of
    turns on a uniform grid, which nulls the summed signal exactly.  The
    cascade then uses the fixed per-pulse flip angle theta = pi/(M+1).
    For a factor the cascade amounts to a pi rotation about x, the
    accumulated phase is inverted, and a second identical gradient
    refocuses the magnetization into a full-amplitude echo; for a
    non-factor the refocusing fails and the slice average stays small.
    No reference run is needed since a perfect echo returns the entire
    initial magnetization.

Both schemes report the magnitude of the complex transverse magnetization;
the raw quadratures are kept on the sample for inspection.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import ConfigurationError, FactorizationTarget, phase_schedule
from .spin import compose, pulse

# below this the reference is zero to machine precision and cannot normalize
REFERENCE_FLOOR = 1e-12


class NormalizationError(RuntimeError):
    """Reference signal vanishes, so the differential readout cannot be scaled."""


class SmallAngleWarning(UserWarning):
    """Total differential flip angle left the linear-response regime."""


@dataclass(frozen=True)
class DifferentialParams:
    """Per-pulse flip angle in radians and whether to scale by the reference run."""

    theta: float = math.radians(1.0)
    normalize: bool = True

    def __post_init__(self):
        if not math.isfinite(self.theta) or self.theta <= 0.0:
            raise ConfigurationError(
                f"flip angle theta must be finite and > 0 (got {self.theta})"
            )


@dataclass(frozen=True)
class SpatialParams:
    """Gradient discretization: slice count and full dephasing turns across
    the sample."""

    n_slices: int = 256
    windings: int = 1

    def __post_init__(self):
        if self.n_slices < 2:
            raise ConfigurationError(f"n_slices must be >= 2 (got {self.n_slices})")
        if self.windings < 1:
            raise ConfigurationError(f"windings must be >= 1 (got {self.windings})")


@dataclass(frozen=True)
class SignalSample:
    """Readout for one trial factor: raw transverse quadratures and the
    normalized magnitude."""

    j: int
    raw_transverse: complex
    normalized: float


def slice_phases(params: SpatialParams) -> np.ndarray:
    """Dephasing angles 2*pi*windings*k/n_slices for k = 0..n_slices-1.

    Uniform grid, endpoint excluded; whenever n_slices does not divide
    windings the phasor average over the grid is exactly zero.
    """
    k = np.arange(params.n_slices)
    return 2.0 * math.pi * params.windings * k / params.n_slices


def _cascade_transverse(theta: float, phases) -> complex:
    # Shared by measurement and reference so a factor run, whose phases are
    # all exactly 0.0, reproduces the reference bitwise.
    state = np.array([0.0, 0.0, 1.0])
    for phi in phases:
        state = pulse(theta, phi).matrix @ state
    return complex(state[0], state[1])


def reference_signal(truncation: int, theta: float) -> complex:
    """Transverse magnetization after M+1 identical pulses about x applied
    to z polarization; the magnitude is sin((M+1)*theta)."""
    if not math.isfinite(theta) or theta <= 0.0:
        raise ConfigurationError(f"flip angle theta must be finite and > 0 (got {theta})")
    return _cascade_transverse(theta, (0.0,) * (truncation + 1))


def simulate_differential(
    target: FactorizationTarget,
    j: int,
    truncation: int,
    params: DifferentialParams | None = None,
) -> SignalSample:
    """Differential-excitation readout for one trial factor."""
    if params is None:
        params = DifferentialParams()
    sched = phase_schedule(target, j, truncation)
    total = (truncation + 1) * params.theta
    if total > math.pi / 4.0:
        warnings.warn(
            f"(M+1)*theta = {total:.3f} rad exceeds pi/4; the transverse signal "
            "is no longer proportional to the summed rotation",
            SmallAngleWarning,
            stacklevel=2,
        )
    raw = _cascade_transverse(params.theta, sched.phases)
    if not params.normalize:
        return SignalSample(j=j, raw_transverse=raw, normalized=abs(raw))
    ref = reference_signal(truncation, params.theta)
    if abs(ref) < REFERENCE_FLOOR:
        raise NormalizationError(
            f"reference magnitude {abs(ref):.3e} vanishes; "
            f"(M+1)*theta = {total!r} rad is a multiple of pi"
        )
    return SignalSample(j=j, raw_transverse=raw, normalized=abs(raw) / abs(ref))


def simulate_spatial(
    target: FactorizationTarget,
    j: int,
    truncation: int,
    params: SpatialParams | None = None,
) -> SignalSample:
    """Spatial-averaging readout for one trial factor.

    Each slice starts at (1, 0, 0), is dephased by its slice angle, driven
    through the cascade, dephased again, and the transverse magnetization
    is averaged over slices in fixed order.
    """
    if params is None:
        params = SpatialParams()
    sched = phase_schedule(target, j, truncation)
    theta = math.pi / (truncation + 1)  # the M+1 flips must total pi
    net = compose([pulse(theta, phi) for phi in sched.phases]).matrix
    alpha = slice_phases(params)
    dephased = np.stack([np.cos(alpha), np.sin(alpha), np.zeros_like(alpha)], axis=1)
    after = dephased @ net.T
    echoed = (after[:, 0] + 1j * after[:, 1]) * np.exp(1j * alpha)
    raw = complex(np.mean(echoed))
    return SignalSample(j=j, raw_transverse=raw, normalized=abs(raw))
