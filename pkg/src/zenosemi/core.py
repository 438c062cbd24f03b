"""Scaling parameters, phase-space geometry, and classical limit objects.

The semiclassical regime couples the truncation rank N to the Planck
constant through hbar * N = mu.  Everything downstream (kernels, symbols,
spectra, flows) concentrates on the disk x^2 + p^2 < 2*mu of the phase
plane, whose boundary circle of radius sqrt(2*mu) separates the classically
allowed region from the forbidden one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SemiclassicalScale",
    "PhasePoint",
    "DiskGeometry",
    "classical_hamiltonian",
    "chi_disk",
    "semicircle_density",
    "semicircle_cdf",
    "edge_constant",
]


@dataclass(frozen=True)
class SemiclassicalScale:
    """Coupled triple (N, mu, hbar) with hbar := mu / N.

    hbar is always derived so the constraint hbar * N = mu cannot drift;
    APIs take (N, mu) and never a free hbar.
    """

    N: int
    mu: float

    def __post_init__(self):
        if self.N < 1 or int(self.N) != self.N:
            raise ValueError(f"truncation rank N must be a positive integer, got {self.N}")
        if not (self.mu > 0):
            raise ValueError(f"mu must be positive, got {self.mu}")

    @property
    def hbar(self) -> float:
        return self.mu / self.N

    @property
    def disk(self) -> "DiskGeometry":
        return DiskGeometry(self.mu)


@dataclass(frozen=True)
class PhasePoint:
    """Point (x, p) of the phase plane."""

    x: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.p)):
            raise ValueError(f"phase point coordinates must be finite, got ({self.x}, {self.p})")

    @property
    def radius(self) -> float:
        return math.hypot(self.x, self.p)


@dataclass(frozen=True)
class DiskGeometry:
    """Classically allowed disk x^2 + p^2 < 2*mu and its boundary circle."""

    mu: float
    radius: float = field(init=False)

    def __post_init__(self):
        if not (self.mu > 0):
            raise ValueError(f"mu must be positive, got {self.mu}")
        object.__setattr__(self, "radius", math.sqrt(2.0 * self.mu))


def classical_hamiltonian(q: PhasePoint) -> float:
    """Harmonic-oscillator energy (x^2 + p^2) / 2 at the phase point q."""
    return 0.5 * (q.x * q.x + q.p * q.p)


def chi_disk(q: PhasePoint, geo: DiskGeometry) -> float:
    """Indicator of the allowed disk: 1 inside, 0 outside, 1/2 on the circle.

    The midpoint value on the measure-zero boundary keeps quadratures
    symmetric; no integral depends on it.
    """
    r2 = q.x * q.x + q.p * q.p
    lim = 2.0 * geo.mu
    if r2 < lim:
        return 1.0
    if r2 > lim:
        return 0.0
    return 0.5


def semicircle_density(y, mu: float):
    """Normalised semicircular density of radius sqrt(2*mu).

    rho_mu(y) = sqrt((2*mu - y^2)_+) / (pi * mu); integrates to 1.
    Accepts scalars or arrays.
    """
    if not (mu > 0):
        raise ValueError(f"mu must be positive, got {mu}")
    y = np.asarray(y, dtype=float)
    val = np.sqrt(np.maximum(2.0 * mu - y * y, 0.0)) / (math.pi * mu)
    return val if val.shape else float(val)


def semicircle_cdf(y, mu: float):
    """Cumulative distribution of the semicircular density.

    F(y) = 1/2 + [y*sqrt(2*mu - y^2) + 2*mu*arcsin(y/sqrt(2*mu))] / (2*pi*mu)
    on the support, clamped to {0, 1} outside.
    """
    if not (mu > 0):
        raise ValueError(f"mu must be positive, got {mu}")
    y = np.asarray(y, dtype=float)
    r = math.sqrt(2.0 * mu)
    yc = np.clip(y, -r, r)
    val = 0.5 + (yc * np.sqrt(np.maximum(2.0 * mu - yc * yc, 0.0))
                 + 2.0 * mu * np.arcsin(yc / r)) / (2.0 * math.pi * mu)
    val = np.clip(val, 0.0, 1.0)
    return val if val.shape else float(val)


def edge_constant(mu: float) -> float:
    """Slope constant c_mu = 2^(1/2) * mu^(1/6).

    c_mu^3 is the one-sided slope |p'(x)| of the energy shell p(x) =
    sqrt((2*mu - x^2)_+) at the turning points x = +-sqrt(2*mu); c_mu sets
    the Airy rescaling of the kernel at the boundary.
    """
    if not (mu > 0):
        raise ValueError(f"mu must be positive, got {mu}")
    return math.sqrt(2.0) * mu ** (1.0 / 6.0)
