"""Trial-factor sweeps, threshold classification, and the complete
factorization driver."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace
from datetime import datetime, timezone
from enum import Enum

from .core import ConfigurationError, FactorizationTarget, is_exact_factor
from .methods import (
    DifferentialParams,
    SignalSample,
    SpatialParams,
    simulate_differential,
    simulate_spatial,
)


class Method(str, Enum):
    DIFFERENTIAL = "differential"
    SPATIAL = "spatial"


@dataclass(frozen=True)
class ScanConfig:
    """One sweep: method, inclusive j range, truncation, and threshold."""

    method: Method
    j_min: int
    j_max: int
    truncation: int
    threshold: float = 0.7
    params: DifferentialParams | SpatialParams | None = None

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if self.j_min < 2 or self.j_max < self.j_min:
            raise ConfigurationError(
                f"need 2 <= j_min <= j_max (got j_min={self.j_min}, j_max={self.j_max})"
            )
        if self.truncation < 0:
            raise ConfigurationError(
                f"truncation M must be >= 0 (got {self.truncation})"
            )
        if not 0.0 < self.threshold < 1.0:
            raise ConfigurationError(
                f"threshold must lie strictly between 0 and 1 (got {self.threshold})"
            )

    def resolved_params(self) -> DifferentialParams | SpatialParams:
        if self.params is not None:
            return self.params
        if self.method is Method.DIFFERENTIAL:
            return DifferentialParams()
        return SpatialParams()


@dataclass(frozen=True)
class ScanRecord:
    """Per-trial-factor outcome.  arithmetic_check is recorded for audit
    only and never feeds classification."""

    j: int
    normalized: float
    classified: bool
    arithmetic_check: bool
    error: str | None = None


@dataclass(frozen=True)
class ScanResult:
    n: int
    exponent: int
    method: Method
    truncation: int
    threshold: float
    params: dict
    records: tuple[ScanRecord, ...]
    timestamp: str | None = None


_SIMULATORS = {
    Method.DIFFERENTIAL: simulate_differential,
    Method.SPATIAL: simulate_spatial,
}


def classify(sample: SignalSample, threshold: float) -> bool:
    """Signal-based factor call: the normalized magnitude meets the threshold."""
    if not 0.0 < threshold < 1.0:
        raise ConfigurationError(
            f"threshold must lie strictly between 0 and 1 (got {threshold})"
        )
    return sample.normalized >= threshold


def scan(
    target: FactorizationTarget,
    cfg: ScanConfig,
    jobs: int = 1,
    with_timestamp: bool = True,
) -> ScanResult:
    """Evaluate every integer j in [j_min, j_max].

    Records are assembled in ascending j regardless of worker count, and a
    per-j failure is recorded on its row instead of aborting the sweep.
    """
    if jobs < 1:
        raise ConfigurationError(f"jobs must be >= 1 (got {jobs})")
    params = cfg.resolved_params()
    simulate = _SIMULATORS[cfg.method]

    def one(j: int) -> ScanRecord:
        check = is_exact_factor(target.n, j)
        try:
            sample = simulate(target, j, cfg.truncation, params)
        except Exception as exc:
            return ScanRecord(
                j=j,
                normalized=math.nan,
                classified=False,
                arithmetic_check=check,
                error=f"{type(exc).__name__}: {exc}",
            )
        return ScanRecord(
            j=j,
            normalized=sample.normalized,
            classified=classify(sample, cfg.threshold),
            arithmetic_check=check,
        )

    js = range(cfg.j_min, cfg.j_max + 1)
    if jobs == 1:
        records = tuple(one(j) for j in js)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = tuple(pool.map(one, js))
    return ScanResult(
        n=target.n,
        exponent=target.exponent,
        method=cfg.method,
        truncation=cfg.truncation,
        threshold=cfg.threshold,
        params=asdict(params),
        records=records,
        timestamp=(
            datetime.now(timezone.utc).isoformat(timespec="seconds")
            if with_timestamp
            else None
        ),
    )


def full_factorize(
    target: FactorizationTarget, cfg: ScanConfig, jobs: int = 1
) -> list[tuple[int, int]]:
    """Factor completely by repeated dense scanning and division.

    Each round scans j = 2..isqrt(n) with the template config (its range
    fields are overridden), then divides out every classified candidate
    that exact division confirms, smallest first.  Confirmation means a
    ghost, a non-factor whose signal clears the threshold at small M, can
    never corrupt the output; classification never misses a true factor
    because a factor signal is 1 by construction.  Returns (factor,
    multiplicity) pairs whose product is n.
    """
    n = target.n
    out: list[tuple[int, int]] = []
    while n > 1:
        limit = math.isqrt(n)
        confirmed: list[int] = []
        if limit >= 2:
            round_cfg = replace(cfg, j_min=2, j_max=limit)
            result = scan(
                FactorizationTarget(n, target.exponent), round_cfg, jobs=jobs
            )
            if all(r.error is not None for r in result.records):
                raise RuntimeError(
                    "every trial factor failed to evaluate; first error: "
                    f"{result.records[0].error}"
                )
            confirmed = [r.j for r in result.records if r.classified and n % r.j == 0]
        if not confirmed:
            out.append((n, 1))  # no divisor up to sqrt(n): n is prime
            break
        for p in confirmed:
            if n % p:
                continue  # p's own prime factors were already divided out
            mult = 0
            while n % p == 0:
                n //= p
                mult += 1
            out.append((p, mult))
    assert math.prod(f**k for f, k in out) == target.n
    return out
