"""Weierstrass elliptic functions: lattice sums, theta expressions, periods.

Two independent routes to the same functions live here.  The direct route
truncates the defining lattice sums (shell by shell, deterministic order);
the theta route differentiates log theta_1 termwise and fixes the additive
constant eta_1/omega_1 by a short Richardson extrapolation against the
lattice sum near the pole.  Their agreement is one of the package's main
cross-checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .contours import Polyline, contour_integral
from .errors import DomainError, NumericFailure
from .quadrature import adaptive_gk
from .theta import jacobi_theta

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class PeriodPair:
    """Lattice generators with Im(omega2/omega1) > 0."""

    omega1: complex
    omega2: complex

    def __post_init__(self):
        w1, w2 = complex(self.omega1), complex(self.omega2)
        if w1 == 0 or w2 == 0:
            raise DomainError("periods must be nonzero")
        if not (w2 / w1).imag > 0:
            raise DomainError("need Im(omega2/omega1) > 0")
        object.__setattr__(self, "omega1", w1)
        object.__setattr__(self, "omega2", w2)

    @property
    def tau(self):
        return self.omega2 / self.omega1


@dataclass(frozen=True)
class EllipticInvariants:
    g2: complex
    g3: complex
    eta1: complex = 0j
    truncation: int = 20

    def __post_init__(self):
        if self.truncation < 20:
            raise DomainError("truncation must be at least 20")


def _shell_points(L: PeriodPair, k: int):
    """Nonzero lattice points m omega1 + n omega2 with max(|m|,|n|) = k,
    in a fixed deterministic order."""
    w1, w2 = L.omega1, L.omega2
    pts = []
    for m in range(-k, k + 1):
        for n in range(-k, k + 1):
            if max(abs(m), abs(n)) == k:
                pts.append(m * w1 + n * w2)
    return np.array(pts)


def _nearest_lattice_distance(z, L):
    t = np.linalg.solve(
        np.array([[L.omega1.real, L.omega2.real], [L.omega1.imag, L.omega2.imag]]),
        np.array([z.real, z.imag]),
    )
    best = math.inf
    for dm in (math.floor(t[0]), math.ceil(t[0])):
        for dn in (math.floor(t[1]), math.ceil(t[1])):
            best = min(best, abs(z - (dm * L.omega1 + dn * L.omega2)))
    return best


def wp_lattice(z, L: PeriodPair, N: int = 200) -> complex:
    """Weierstrass p-function by the truncated defining sum.

    1/z^2 plus the lattice-regularized terms over all shells up to sup-norm
    N, each shell summed before being added (the symmetric shells cancel the
    odd-order tail, leaving truncation error O(1/N^2) in practice).
    """
    if N < 20:
        raise DomainError("N must be at least 20")
    z = complex(z)
    if _nearest_lattice_distance(z, L) <= 1e-8 * abs(L.omega1):
        raise DomainError(f"z = {z} lies on (or too near) the lattice")
    total = 1.0 / (z * z)
    for k in range(1, N + 1):
        w = _shell_points(L, k)
        total += complex(np.sum(1.0 / (z - w) ** 2 - 1.0 / w**2))
    return total


def eisenstein(L: PeriodPair, N: int = 200) -> EllipticInvariants:
    """g2 = 60 sum' w^-4 and g3 = 140 sum' w^-6, truncated at shell N."""
    if N < 20:
        raise DomainError("N must be at least 20")
    g2 = 0j
    g3 = 0j
    for k in range(1, N + 1):
        w = _shell_points(L, k)
        g2 += complex(np.sum(w**-4.0))
        g3 += complex(np.sum(w**-6.0))
    return EllipticInvariants(g2=60.0 * g2, g3=140.0 * g3, truncation=N)


def _log_theta1_d2(z, L: PeriodPair, tol=1e-14):
    """(d/dz)^2 log theta_1(z/omega1 | tau), by exact series derivatives."""
    tau = L.tau
    u = z / L.omega1
    t0 = jacobi_theta(1, u, tau, tol)
    if abs(t0) < 1e-300:
        raise DomainError(f"z = {z} is too close to a lattice point")
    t1 = jacobi_theta(1, u, tau, tol, order=1)
    t2 = jacobi_theta(1, u, tau, tol, order=2)
    return (t2 / t0 - (t1 / t0) ** 2) / (L.omega1 * L.omega1)


def _log_theta1_d3(z, L: PeriodPair, tol=1e-14):
    """(d/dz)^3 log theta_1(z/omega1 | tau)."""
    tau = L.tau
    u = z / L.omega1
    t0 = jacobi_theta(1, u, tau, tol)
    if abs(t0) < 1e-300:
        raise DomainError(f"z = {z} is too close to a lattice point")
    t1 = jacobi_theta(1, u, tau, tol, order=1)
    t2 = jacobi_theta(1, u, tau, tol, order=2)
    t3 = jacobi_theta(1, u, tau, tol, order=3)
    r1 = t1 / t0
    return (t3 / t0 - 3.0 * r1 * (t2 / t0) + 2.0 * r1**3) / L.omega1**3


def eta1_ratio(L: PeriodPair, tol=1e-9, lattice_trunc=300) -> complex:
    """The constant eta_1/omega_1 in the theta expression for p.

    Obtained as the z -> 0 limit of p_lattice(z) + (log theta_1(z/omega1))''
    whose remainder is O(z^2): one Richardson step on z = omega1 * {0.05,
    0.025}, with a second step at 0.0125 as the disagreement guard.
    """
    def matched(frac):
        z = frac * L.omega1
        return wp_lattice(z, L, lattice_trunc) + _log_theta1_d2(z, L)

    a1, a2, a3 = matched(0.05), matched(0.025), matched(0.0125)
    first = (4.0 * a2 - a1) / 3.0
    second = (4.0 * a3 - a2) / 3.0
    if abs(first - second) > 10.0 * tol:
        raise NumericFailure(
            f"eta_1 extrapolations disagree by {abs(first - second):g}",
            best=second,
        )
    return second


def wp_via_theta(z, L: PeriodPair, tol=1e-9, eta1_over_omega1=None) -> complex:
    """p(z) = -(d/dz)^2 log theta_1(z/omega1 | tau) + eta_1/omega_1.

    All differentiation is termwise in the theta series.  The additive
    constant may be passed in to amortize its computation across calls.
    """
    if eta1_over_omega1 is None:
        eta1_over_omega1 = eta1_ratio(L, tol)
    return -_log_theta1_d2(complex(z), L) + eta1_over_omega1


def wp_prime_via_theta(z, L: PeriodPair) -> complex:
    """p'(z) = -(d/dz)^3 log theta_1(z/omega1 | tau) (the constant drops)."""
    return -_log_theta1_d3(complex(z), L)


def sigma(z, L: PeriodPair, tol=1e-12, eta1_over_omega1=None) -> complex:
    """Weierstrass sigma via theta_1, normalized so sigma(z)/z -> 1 at 0.

    sigma(z) = C exp(eta_1 z^2 / (2 omega_1)) theta_1(z/omega_1 | tau) with
    C = omega_1 / theta_1'(0 | tau).
    """
    z = complex(z)
    if eta1_over_omega1 is None:
        eta1_over_omega1 = eta1_ratio(L)
    tau = L.tau
    t1_zero = jacobi_theta(1, 0.0, tau, tol, order=1)
    if abs(t1_zero) < 1e-300:
        raise NumericFailure("theta_1'(0) vanished; cannot normalize sigma")
    scale = L.omega1 / t1_zero
    gauss = cmath.exp(0.5 * eta1_over_omega1 * z * z)
    return scale * gauss * jacobi_theta(1, z / L.omega1, tau, tol)


def ode_residual(z, L: PeriodPair, N: int = 200) -> float:
    """Normalized defect of (p')^2 = 4 p^3 - g2 p - g3 at z.

    p and p' come from the theta route, g2 and g3 from the truncated
    Eisenstein sums at shell N; the residual is divided by 1 + |p|^3.
    """
    inv = eisenstein(L, N)
    const = eta1_ratio(L)
    p = wp_via_theta(z, L, eta1_over_omega1=const)
    pp = wp_prime_via_theta(z, L)
    lhs = pp * pp
    rhs = 4.0 * p**3 - inv.g2 * p - inv.g3
    return abs(lhs - rhs) / (1.0 + abs(p) ** 3)


def parallelogram_residue_sum(f, L: PeriodPair, base=0j, tol=1e-10) -> complex:
    """(2 pi i)^-1 oint f over the boundary of a fundamental parallelogram
    translated by ``base``; near zero for an elliptic f with no poles on
    the boundary (the caller chooses the offset)."""
    corners = (
        base,
        base + L.omega1,
        base + L.omega1 + L.omega2,
        base + L.omega2,
        base,
    )
    result = contour_integral(f, Polyline(corners), tol)
    return result.value / TWO_PI_I


def periods_real_cubic(e1: float, e2: float, e3: float) -> PeriodPair:
    """Period lattice of y^2 = 4(x - e1)(x - e2)(x - e3) for real e1 > e2 > e3.

    The two cycles are the real ovals of the curve: omega1 integrates dx/y
    over the bounded oval [e3, e2] (giving a positive real period) and
    omega2 over [e2, e1] where the cubic is negative (purely imaginary
    period, oriented so Im(omega2/omega1) > 0).  The substitution
    x = lo + (hi - lo) sin^2 t removes both endpoint singularities.

    The half-period values of the associated p-function recover e_i shifted
    by the trace: p(omega1/2) = e1 - s, p((omega1+omega2)/2) = e2 - s,
    p(omega2/2) = e3 - s with s = (e1 + e2 + e3)/3 (zero for depressed
    cubics, in particular whenever the e_i are the roots of 4t^3-g2 t-g3).
    """
    if not (e1 > e2 > e3):
        raise DomainError("need e1 > e2 > e3 strictly")

    def arch(lo, hi, other):
        # integral over [lo, hi] of dx / sqrt(|4 (x-e1)(x-e2)(x-e3)|) with
        # |other - x| the factor bounded away from zero on the arch
        span = hi - lo

        def integrand(t):
            s = math.sin(t)
            x = lo + span * s * s
            return 1.0 / math.sqrt(abs(other - x))

        return adaptive_gk(integrand, 0.0, 0.5 * math.pi, 1e-13).value.real

    omega1 = 2.0 * arch(e3, e2, e1)
    omega2 = 2.0j * arch(e2, e1, e3)
    return PeriodPair(omega1, omega2)
