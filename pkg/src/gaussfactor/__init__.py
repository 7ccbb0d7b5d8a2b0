"""Integer factorization by truncated Gauss sums, evaluated through two
simulated NMR measurement schemes (differential excitation and spatial
averaging with echo refocusing)."""

from .core import (
    MAX_TERMS,
    ConfigurationError,
    FactorizationTarget,
    GaussSumValue,
    PhaseSchedule,
    gauss_sum_exact,
    is_exact_factor,
    phase_schedule,
)
from .methods import (
    DifferentialParams,
    NormalizationError,
    SignalSample,
    SmallAngleWarning,
    SpatialParams,
    reference_signal,
    simulate_differential,
    simulate_spatial,
    slice_phases,
)
from .scanner import (
    Method,
    ScanConfig,
    ScanRecord,
    ScanResult,
    classify,
    full_factorize,
    scan,
)
from .spin import BlochState, Rotation, apply, compose, pulse, z_rotation

__version__ = "0.1.0"

__all__ = [
    "MAX_TERMS",
    "ConfigurationError",
    "FactorizationTarget",
    "GaussSumValue",
    "PhaseSchedule",
    "gauss_sum_exact",
    "is_exact_factor",
    "phase_schedule",
    "DifferentialParams",
    "NormalizationError",
    "SignalSample",
    "SmallAngleWarning",
    "SpatialParams",
    "reference_signal",
    "simulate_differential",
    "simulate_spatial",
    "slice_phases",
    "Method",
    "ScanConfig",
    "ScanRecord",
    "ScanResult",
    "classify",
    "full_factorize",
    "scan",
    "BlochState",
    "Rotation",
    "apply",
    "compose",
    "pulse",
    "z_rotation",
    "__version__",
]
