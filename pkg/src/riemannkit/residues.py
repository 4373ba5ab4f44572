"""Residue extraction and residue-theorem evaluation."""

from __future__ import annotations

import math

from .contours import Circle, contour_integral
from .errors import DomainError, InternalConsistencyError, OnContourPoleError
from .numeric import P1Point, Polynomial, RationalFunction, laurent_expand, ord_at, poly_roots
from .quadrature import polar_disk_quadrature

ON_CONTOUR_TOL = 1e-9

TWO_PI_I = 2j * math.pi


def residue_rational(f: RationalFunction, pole) -> complex:
    """Residue of a rational function at a pole, extracted algebraically.

    The Laurent coefficients come from exact series division, so the result
    is exact whenever the coefficient arithmetic is.
    """
    k = ord_at(f, P1Point.finite(pole))
    if k >= 0:
        raise DomainError(f"{pole} is not a pole (ord = {k})")
    return laurent_expand(f, pole, -1).residue


def residue_via_derivative(f: RationalFunction, pole) -> complex:
    """Residue by the higher-order-pole derivative formula.

    For a pole of order k, the residue is the (k-1)-st derivative of
    (z - pole)^k f(z) at the pole divided by (k-1)!.  The differentiation is
    done with polynomial arithmetic, no numerics; serves as an independent
    cross-check of the Laurent route.
    """
    k = -ord_at(f, P1Point.finite(pole))
    if k <= 0:
        raise DomainError(f"{pole} is not a pole")
    lin = Polynomial([-pole, 1])
    g = RationalFunction(f.num * lin**k, f.den)
    for _ in range(k - 1):
        g = g.derivative()
    return g(pole) / math.factorial(k - 1)


def residue_reciprocal(h, h_prime, z0, tol=1e-8) -> complex:
    """Residue of 1/h at a simple zero z0 of h, namely 1/h'(z0)."""
    z0 = complex(z0)
    hv = h(z0)
    if abs(hv) >= tol:
        raise DomainError(f"h({z0}) = {hv} is not approximately zero")
    hp = h_prime(z0)
    if abs(hp) < tol:
        raise DomainError(f"degenerate zero: h'({z0}) = {hp}")
    return 1.0 / hp


def poles_of(f: RationalFunction):
    """(pole, order) pairs of a reduced rational function (finite poles)."""
    if f.den.degree < 1:
        return []
    return poly_roots(f.den)


def integrate_by_residues(f: RationalFunction, contour: Circle, check=True,
                          tol=1e-9) -> complex:
    """∮ f dz on a circle as 2 pi i times the sum of the enclosed residues.

    Poles within ON_CONTOUR_TOL * radius of the path raise; when ``check`` is
    set the value is verified against direct quadrature.
    """
    if not isinstance(contour, Circle):
        raise DomainError("integrate_by_residues expects a Circle contour")
    center, radius = complex(contour.center), contour.radius
    total = 0j
    for pole, _ in poles_of(f):
        dist = abs(pole - center)
        if abs(dist - radius) <= ON_CONTOUR_TOL * radius:
            raise OnContourPoleError(f"pole {pole} lies on the contour")
        if dist < radius:
            total += complex(residue_rational(f, pole))
    total *= TWO_PI_I * contour.orientation
    if check:
        quad = contour_integral(f, contour, tol)
        if abs(quad.value - total) > 100 * (tol + quad.error_estimate) + 1e-9:
            raise InternalConsistencyError(
                f"residue sum {total} disagrees with quadrature {quad.value}"
            )
    return total


def cauchy_green_disk(z, exclusion=0.02, n_theta=256):
    """Area integral ∬_{|w|<1} dA/(w-z) against its closed form -pi conj(z).

    The integrand is odd around w = z, so a small disk around the singularity
    integrates to zero exactly and is excluded; the rest is covered by a
    polar grid centered at z.  Returns (numeric, reference).
    """
    z = complex(z)
    if abs(z) >= 0.95:
        raise DomainError("need |z| < 0.95 to keep the singularity interior")
    value, _ = polar_disk_quadrature(
        lambda w: 1.0 / (w - z), z, 1.0, exclusion, n_theta
    )
    return value, -math.pi * z.conjugate()
