"""Rotation algebra for a single spin-1/2 in the rotating frame.

Bloch vectors live in R^3; every RF pulse and every gradient period acts
as a proper rotation.  The handedness is pinned by two anchors: a z
rotation by alpha takes (1, 0, 0) to (cos alpha, sin alpha, 0), and a pi
pulse about x takes (cos alpha, sin alpha, 0) to (cos alpha, -sin alpha, 0).
Both follow from propagating states with exp(-i*theta*(Ix cos phi + Iy sin phi)).
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BlochState:
    """Expectation values (Ix, Iy, Iz); a pure state has unit norm."""

    x: float
    y: float
    z: float

    @property
    def transverse(self) -> complex:
        """x + iy, the detected magnetization."""
        return complex(self.x, self.y)

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class Rotation:
    """Proper rotation stored as a 3x3 orthogonal matrix."""

    matrix: np.ndarray

    @classmethod
    def identity(cls) -> "Rotation":
        return cls(np.eye(3))


def pulse(theta: float, phi: float) -> Rotation:
    """Rotation by theta about the in-plane axis (cos phi, sin phi, 0).

    Right-handed, so a weak pulse applied to +z polarization produces the
    transverse magnetization -i*sin(theta)*exp(i*phi).
    """
    c, s = math.cos(theta), math.sin(theta)
    nx, ny = math.cos(phi), math.sin(phi)
    k = 1.0 - c
    return Rotation(
        np.array(
            [
                [c + k * nx * nx, k * nx * ny, s * ny],
                [k * nx * ny, c + k * ny * ny, -s * nx],
                [-s * ny, s * nx, c],
            ]
        )
    )


def z_rotation(alpha: float) -> Rotation:
    """Rotation by alpha about +z; (1, 0, 0) maps to (cos alpha, sin alpha, 0)."""
    c, s = math.cos(alpha), math.sin(alpha)
    return Rotation(
        np.array(
            [
                [c, -s, 0.0],
                [s, c, 0.0],
                [0.0, 0.0, 1.0],
            ]
        )
    )


def compose(seq: Sequence[Rotation]) -> Rotation:
    """Combine rotations into one; the first element of seq acts first."""
    if not seq:
        raise ValueError("compose needs at least one rotation")
    out = seq[0].matrix
    for r in seq[1:]:
        out = r.matrix @ out
    return Rotation(out)


def apply(r: Rotation, s: BlochState) -> BlochState:
    """Rotate a Bloch state; the norm is preserved to round-off."""
    v = r.matrix @ s.as_array()
    return BlochState(float(v[0]), float(v[1]), float(v[2]))
