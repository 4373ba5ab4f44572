"""Gamma function from its integral definition plus the reflection formula."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import DomainError
from .quadrature import adaptive_gk


def _gamma_integral(s, tol=1e-12):
    """∫_0^∞ t^(s-1) e^(-t) dt for Re s >= 1/2, split at t = 1.

    Head in the variable t = u^2 (removes the endpoint singularity for
    1/2 <= Re s < 1); tail via the substitution u = e^(-t), which maps
    [1, ∞) to (0, 1/e] with integrand log(1/u)^(s-1).
    """
    head = adaptive_gk(
        lambda u: 2.0 * u ** (2.0 * s - 1.0) * math.exp(-u * u) if u > 0 else 0.0,
        0.0, 1.0, tol,
    )
    tail = adaptive_gk(
        lambda u: cmath.exp((s - 1.0) * cmath.log(-math.log(u))) if 0 < u < 1 else 0.0,
        0.0, math.exp(-1.0), tol,
    )
    return head.value + tail.value


def gamma(s, tol=1e-12) -> complex:
    """Gamma(s) for complex s away from the poles at 0, -1, -2, ...

    Re s >= 1/2 uses adaptive quadrature of the defining integral; otherwise
    the reflection formula Gamma(s) Gamma(1-s) = pi / sin(pi s) transports the
    value from 1 - s.  (The boundary case Re s = 1/2 must go through the
    integral or reflection would recurse onto itself.)
    """
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.0 and s.real == int(s.real):
        raise DomainError(
            f"Gamma has a pole at s = {int(s.real)}; use gamma_residue instead"
        )
    if s.real >= 0.5:
        return _gamma_integral(s, tol)
    return math.pi / (cmath.sin(math.pi * s) * _gamma_integral(1.0 - s, tol))


def gamma_residue(n: int) -> Fraction:
    """Residue of Gamma at s = -n: exactly (-1)^n / n!."""
    if n < 0:
        raise DomainError("n must be a nonnegative integer")
    return Fraction((-1) ** n, math.factorial(n))
