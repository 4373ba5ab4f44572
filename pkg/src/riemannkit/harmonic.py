"""Poisson kernels, harmonic extension, and explicit Laplace solvers.

The Laplacian convention throughout is the geometer's nonnegative one,
Delta = -(d/dtheta)^2 on the circle and Delta = -(d_x^2 + d_y^2) on the
torus, so eigenvalues of the explicit modes are positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CompatibilityError, DomainError, NumericFailure


@dataclass(frozen=True)
class TrigPolynomial:
    """a0 + sum_n (a_n cos n theta + b_n sin n theta), n = 1..N."""

    a0: float = 0.0
    cos_coeffs: tuple = ()
    sin_coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cos_coeffs", tuple(float(c) for c in self.cos_coeffs))
        object.__setattr__(self, "sin_coeffs", tuple(float(c) for c in self.sin_coeffs))

    @property
    def mean(self):
        return self.a0

    @property
    def degree(self):
        return max(len(self.cos_coeffs), len(self.sin_coeffs))

    def __call__(self, theta):
        val = self.a0
        for n, c in enumerate(self.cos_coeffs, start=1):
            val += c * math.cos(n * theta)
        for n, c in enumerate(self.sin_coeffs, start=1):
            val += c * math.sin(n * theta)
        return val


def poisson_kernel_disk(r: float, psi: float) -> float:
    """P_r(psi) = (1 - r^2) / (1 - 2 r cos psi + r^2), for 0 <= r < 1."""
    if not 0.0 <= r < 1.0:
        raise DomainError("need 0 <= r < 1")
    return (1.0 - r * r) / (1.0 - 2.0 * r * math.cos(psi) + r * r)


def poisson_kernel_realpart(r: float, psi: float) -> float:
    """Re((zeta + z)/(zeta - z)) with z = r e^{i psi'}, zeta on the circle;
    equals the kernel and serves as its cross-check."""
    z = r * complex(math.cos(psi), math.sin(psi))
    return ((1 + z) / (1 - z)).real


def poisson_extend_trig(f: TrigPolynomial, r: float, theta: float) -> float:
    """Harmonic extension of trig-polynomial boundary data, in closed form:
    mode n is damped by r^n."""
    if not 0.0 <= r < 1.0:
        raise DomainError("need 0 <= r < 1")
    val = f.a0
    for n, c in enumerate(f.cos_coeffs, start=1):
        val += c * r**n * math.cos(n * theta)
    for n, c in enumerate(f.sin_coeffs, start=1):
        val += c * r**n * math.sin(n * theta)
    return val


def poisson_extend_quadrature(f, r: float, theta: float, nodes: int = 512) -> float:
    """Harmonic extension by trapezoid convolution with the Poisson kernel.

    f is a function of the boundary angle.  Spectrally accurate for smooth
    boundary data; O(1/nodes) for data with jumps.
    """
    if not 0.0 <= r <= 0.99:
        raise DomainError("need 0 <= r <= 0.99")
    phi = 2.0 * math.pi * np.arange(nodes) / nodes
    fvals = np.array([f(p) for p in phi])
    kernel = (1.0 - r * r) / (1.0 - 2.0 * r * np.cos(theta - phi) + r * r)
    return float(np.mean(kernel * fvals))


def poisson_halfplane(x: float, y: float, f, window: float, nodes: int = 2048):
    """Harmonic extension to the upper half-plane by truncated convolution.

    Integrates f against (1/pi) y / ((x-t)^2 + y^2) over [x - window,
    x + window].  The substitution t = x + y tan(s) flattens the kernel to a
    constant, so composite Gauss-Legendre in s distributes nodes where the
    kernel actually lives; the discarded tail is bounded by
    (2/pi) y / window, which must stay below 10% of the kernel mass.
    """
    if y <= 0:
        raise DomainError("need y > 0")
    if window <= 0:
        raise DomainError("window must be positive")
    tail_bound = 2.0 * y / (math.pi * window)
    if tail_bound > 0.1:
        raise NumericFailure(f"window too small: kernel tail bound {tail_bound:g}")
    s_max = math.atan(window / y)
    n_panels = max(1, nodes // 32)
    xg, wg = np.polynomial.legendre.leggauss(32)
    h = 2.0 * s_max / n_panels
    total = 0.0
    for k in range(n_panels):
        a = -s_max + k * h
        s = a + 0.5 * h * (xg + 1.0)
        w = 0.5 * h * wg
        vals = np.array([f(x + y * math.tan(sk)) for sk in s])
        total += float(np.sum(w * vals)) / math.pi
    return total


# -- explicit Laplace solvers ---------------------------------------------


def laplace_circle(f: TrigPolynomial) -> TrigPolynomial:
    """Solve -u'' = f on the circle with mean-zero data and solution.

    Mode n is divided by n^2; a nonzero mean violates the compatibility
    condition and raises.
    """
    if f.a0 != 0.0:
        raise CompatibilityError("f must have mean zero on the circle")
    return TrigPolynomial(
        0.0,
        tuple(c / (n * n) for n, c in enumerate(f.cos_coeffs, start=1)),
        tuple(c / (n * n) for n, c in enumerate(f.sin_coeffs, start=1)),
    )


def circle_derivative_l2sq(u: TrigPolynomial) -> float:
    """Integral over the circle of |u'|^2 (Parseval, so exact in the modes)."""
    total = 0.0
    for n, c in enumerate(u.cos_coeffs, start=1):
        total += math.pi * n * n * c * c
    for n, c in enumerate(u.sin_coeffs, start=1):
        total += math.pi * n * n * c * c
    return total


def circle_l2sq(f: TrigPolynomial) -> float:
    """Integral over the circle of |f|^2."""
    total = 2.0 * math.pi * f.a0 * f.a0
    for c in f.cos_coeffs:
        total += math.pi * c * c
    for c in f.sin_coeffs:
        total += math.pi * c * c
    return total


# torus modes: keys (m, n, parity) with parity in {"cc","cs","sc","ss"},
# standing for cos/sin(2 pi m x) * cos/sin(2 pi n y)
TORUS_PARITIES = ("cc", "cs", "sc", "ss")


def _check_torus_modes(modes):
    clean = {}
    for (m, n, parity), c in dict(modes).items():
        if parity not in TORUS_PARITIES:
            raise DomainError(f"parity must be one of {TORUS_PARITIES}")
        if m < 0 or n < 0:
            raise DomainError("mode indices must be nonnegative")
        if parity[0] == "s" and m == 0:
            raise DomainError("sin(0)=0 mode is degenerate")
        if parity[1] == "s" and n == 0:
            raise DomainError("sin(0)=0 mode is degenerate")
        if c:
            clean[(int(m), int(n), parity)] = float(c)
    return clean


def laplace_torus(modes):
    """Solve -(d_x^2 + d_y^2) u = f on the unit torus in Fourier modes.

    f is given as {(m, n, parity): coeff} on the basis
    cos/sin(2 pi m x) cos/sin(2 pi n y); each coefficient is divided by
    4 pi^2 (m^2 + n^2).  The (0,0) mode must be absent (mean zero).
    """
    modes = _check_torus_modes(modes)
    if any(m == 0 and n == 0 for m, n, _ in modes):
        raise CompatibilityError("f must have mean zero on the torus")
    return {
        (m, n, p): c / (4.0 * math.pi**2 * (m * m + n * n))
        for (m, n, p), c in modes.items()
    }


def _mode_l2sq(m, n):
    """Integral over the unit torus of the squared basis mode (m, n)."""
    fx = 1.0 if m == 0 else 0.5
    fy = 1.0 if n == 0 else 0.5
    return fx * fy


def torus_dirichlet_energy(u_modes) -> float:
    """Dirichlet energy E(u) = (1/2) Int |grad u|^2 over the unit torus.

    Parseval in the modes: each coefficient c on mode (m, n) contributes
    (1/2) c^2 (2 pi)^2 (m^2 + n^2) times the mode's L^2 normalization.
    """
    u_modes = _check_torus_modes(u_modes)
    total = 0.0
    for (m, n, _), c in u_modes.items():
        total += 0.5 * c * c * (2.0 * math.pi) ** 2 * (m * m + n * n) * _mode_l2sq(m, n)
    return total


def laplace_sphere_l1(c: float) -> float:
    """Solve Delta u = c z on the round sphere for the height function z.

    The height function is an l = 1 eigenfunction with Delta z = 2 z under
    the nonnegative convention, so u = c z / 2; this returns the coefficient
    c/2.  Mean zero is automatic since z is odd.
    """
    return 0.5 * c
