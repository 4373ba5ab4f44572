"""First fundamental forms, Gaussian curvature, and numeric Gauss-Bonnet.

The two model surfaces are the unit sphere in the (theta, phi) chart
(azimuth, polar angle) and the torus of radii R > r with
sigma(theta, phi) = ((R + r cos phi) cos theta, (R + r cos phi) sin theta,
r sin phi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class SurfaceSpec:
    """Either the unit sphere or a torus with radii R > r > 0."""

    kind: str
    R: float = 0.0
    r: float = 0.0

    def __post_init__(self):
        if self.kind not in ("sphere", "torus"):
            raise DomainError("kind must be 'sphere' or 'torus'")
        if self.kind == "torus" and not self.R > self.r > 0:
            raise DomainError("torus radii must satisfy R > r > 0")

    @staticmethod
    def unit_sphere():
        return SurfaceSpec("sphere")

    @staticmethod
    def torus(R, r):
        return SurfaceSpec("torus", float(R), float(r))


def first_fundamental(s: SurfaceSpec, u: float, v: float):
    """(E, F, G, sqrt(EG - F^2)) at the chart point (u, v) = (theta, phi)."""
    if s.kind == "sphere":
        sin_phi = math.sin(v)
        return sin_phi * sin_phi, 0.0, 1.0, abs(sin_phi)
    ring = s.R + s.r * math.cos(v)
    return ring * ring, 0.0, s.r * s.r, s.r * abs(ring)


def gauss_curvature(s: SurfaceSpec, u: float, v: float) -> float:
    """K at (theta, phi): 1 on the sphere, cos(phi)/(r (R + r cos phi)) on
    the torus."""
    if s.kind == "sphere":
        return 1.0
    return math.cos(v) / (s.r * (s.R + s.r * math.cos(v)))


def _phi_rule(s: SurfaceSpec, grid: int):
    """Quadrature nodes/weights in phi: composite 4-point Gauss-Legendre over
    [0, pi] for the sphere (composite order 8), uniform trapezoid over
    [0, 2 pi) for the torus (periodic, spectral)."""
    if s.kind == "sphere":
        xg, wg = np.polynomial.legendre.leggauss(4)
        panels = max(grid // 4, 1)
        h = math.pi / panels
        nodes, weights = [], []
        for k in range(panels):
            a = k * h
            nodes.extend(a + 0.5 * h * (xg + 1.0))
            weights.extend(0.5 * h * wg)
        return np.array(nodes), np.array(weights)
    phi = 2.0 * math.pi * np.arange(grid) / grid
    return phi, np.full(grid, 2.0 * math.pi / grid)


def surface_integral(s: SurfaceSpec, integrand, grid: int = 64) -> float:
    """Tensor-product quadrature of integrand(theta, phi) * dA over the chart.

    theta uses the uniform trapezoid rule (the chart is periodic in theta);
    phi uses the rule from _phi_rule.
    """
    if grid < 16:
        raise DomainError("grid must be at least 16")
    theta = 2.0 * math.pi * np.arange(grid) / grid
    wt = 2.0 * math.pi / grid
    phi, wphi = _phi_rule(s, grid)
    total = 0.0
    for p, wp in zip(phi, wphi):
        dens = first_fundamental(s, 0.0, p)[3]
        row = sum(integrand(t, p) for t in theta) * wt
        total += row * dens * wp
    return total


def total_curvature(s: SurfaceSpec, grid: int = 64) -> float:
    """∬ K dA: 4 pi for the sphere (Euler characteristic 2), 0 for the torus."""
    return surface_integral(s, lambda t, p: gauss_curvature(s, 0.0, p), grid)


def surface_area(s: SurfaceSpec, grid: int = 64) -> float:
    """∬ dA; the torus value 4 pi^2 r R has a closed form to test against."""
    return surface_integral(s, lambda t, p: 1.0, grid)


def mean_value_check(u, center, rho: float, nodes: int = 512) -> float:
    """|u(center) - average of u on the circle of radius rho around center|.

    Near zero for u harmonic on the closed disk; for non-harmonic u the
    defect measures the failure (e.g. u = x^2 gives rho^2 / 2).
    """
    if rho <= 0:
        raise DomainError("rho must be positive")
    center = complex(center)
    theta = 2.0 * math.pi * np.arange(nodes) / nodes
    pts = center + rho * np.exp(1j * theta)
    avg = float(np.mean([u(z) for z in pts]))
    return abs(u(center) - avg)
