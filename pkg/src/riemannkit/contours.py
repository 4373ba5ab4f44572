"""Integration contours, contour quadrature, winding numbers, zero counting."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError, NumericFailure
from .quadrature import QuadratureResult, integrate_parametrized, trapezoid_circle

ENDPOINT_MATCH_TOL = 1e-12
KEYHOLE_OPENING = 0.05  # half-angle (radians) the slit edges are tilted off the cut

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float
    orientation: int = 1

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError("circle radius must be positive")
        if self.orientation not in (1, -1):
            raise DomainError("orientation must be +1 or -1")

    def endpoints(self):
        start = complex(self.center) + self.radius
        return start, start


@dataclass(frozen=True)
class Segment:
    a: complex
    b: complex

    def endpoints(self):
        return complex(self.a), complex(self.b)


@dataclass(frozen=True)
class Polyline:
    vertices: tuple

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise DomainError("polyline needs at least two vertices")
        object.__setattr__(self, "vertices", tuple(complex(v) for v in self.vertices))

    def endpoints(self):
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class Composite:
    pieces: tuple

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    def endpoints(self):
        return self.pieces[0].endpoints()[0], self.pieces[-1].endpoints()[1]


@dataclass(frozen=True)
class Keyhole:
    """Loop around a slit from the origin in direction ``angle``.

    Outer circle of radius ``outer``, inner of radius ``inner``, joined by two
    radial segments tilted KEYHOLE_OPENING off the slit; the enclosed region
    is everything between the circles except a thin wedge around the cut, so
    the residue theorem applies with the branch cut safely outside.
    """

    inner: float
    outer: float
    angle: float = 0.0

    def __post_init__(self):
        if not (0 < self.inner < self.outer):
            raise DomainError("keyhole needs 0 < inner < outer")

    def endpoints(self):
        start = self.outer * cmath.exp(1j * (self.angle + KEYHOLE_OPENING))
        return start, start


def _is_closed(contour):
    a, b = contour.endpoints()
    scale = 1.0 + abs(a)
    if isinstance(contour, (Circle, Keyhole)):
        return True
    if isinstance(contour, Composite):
        # every piece chains into the next and the loop closes
        pieces = contour.pieces
        if all(_is_closed(p) for p in pieces):
            return True
        prev_end = None
        first_start = None
        for p in pieces:
            s, e = p.endpoints()
            if first_start is None:
                first_start = s
            if prev_end is not None and abs(s - prev_end) > ENDPOINT_MATCH_TOL * scale:
                return False
            prev_end = e
        return abs(prev_end - first_start) <= ENDPOINT_MATCH_TOL * scale
    return abs(a - b) <= ENDPOINT_MATCH_TOL * scale


def require_closed(contour):
    if not _is_closed(contour):
        raise DomainError("operation requires a closed contour")


def _arc_integral(f, center, radius, t0, t1, tol):
    path = lambda t: center + radius * cmath.exp(1j * t)
    dpath = lambda t: 1j * radius * cmath.exp(1j * t)
    return integrate_parametrized(f, path, dpath, t0, t1, tol)


def contour_integral(f, contour, tol=1e-9) -> QuadratureResult:
    """∫ f dz along the contour.

    Circles use doubling trapezoid sums (exponentially convergent for
    integrands analytic near the path); segments, polylines and keyhole
    pieces use adaptive Gauss-Kronrod.
    """
    if isinstance(contour, Circle):
        return trapezoid_circle(
            f, contour.center, contour.radius, tol, contour.orientation
        )
    if isinstance(contour, Segment):
        a, b = contour.a, contour.b
        return integrate_parametrized(
            f, lambda t: a + t * (b - a), lambda t: b - a, 0.0, 1.0, tol
        )
    if isinstance(contour, Polyline):
        pieces = [
            Segment(u, v)
            for u, v in zip(contour.vertices[:-1], contour.vertices[1:])
        ]
        return contour_integral(f, Composite(tuple(pieces)), tol)
    if isinstance(contour, Composite):
        n = max(len(contour.pieces), 1)
        total = 0j
        err = 0.0
        evals = 0
        for piece in contour.pieces:
            r = contour_integral(f, piece, tol / n)
            total += r.value
            err += r.error_estimate
            evals += r.evaluations
        return QuadratureResult(total, err, evals)
    if isinstance(contour, Keyhole):
        d = KEYHOLE_OPENING
        th0 = contour.angle + d
        th1 = contour.angle + 2.0 * math.pi - d
        lo, hi = contour.inner, contour.outer
        e0, e1 = cmath.exp(1j * th0), cmath.exp(1j * th1)
        total = 0j
        err = 0.0
        evals = 0
        for part in (
            lambda: _arc_integral(f, 0.0, hi, th0, th1, tol / 4),
            lambda: contour_integral(f, Segment(hi * e1, lo * e1), tol / 4),
            lambda: _arc_integral(f, 0.0, lo, th1, th0, tol / 4),
            lambda: contour_integral(f, Segment(lo * e0, hi * e0), tol / 4),
        ):
            r = part()
            total += r.value
            err += r.error_estimate
            evals += r.evaluations
        return QuadratureResult(total, err, evals)
    raise DomainError(f"unknown contour type {type(contour).__name__}")


def winding_number(contour, p, tol=1e-9) -> int:
    """Signed number of turns of the closed contour around p.

    Computed as (2 pi i)^-1 ∮ dz/(z - p) and rounded; the raw value must sit
    within 1e-3 of an integer or a NumericFailure is raised.
    """
    require_closed(contour)
    p = complex(p)
    raw = contour_integral(lambda z: 1.0 / (z - p), contour, tol).value / TWO_PI_I
    k = round(raw.real)
    if abs(raw - k) > 1e-3:
        raise NumericFailure(f"winding value {raw} is not close to an integer",
                             best=raw)
    return k


def count_zeros_argument(f, f_prime, contour, tol=1e-9) -> int:
    """Number of zeros of f (with multiplicity) inside a closed contour.

    Argument principle for holomorphic f: (2 pi i)^-1 ∮ f'/f dz.  f must not
    vanish on the contour.
    """
    require_closed(contour)
    raw = contour_integral(lambda z: f_prime(z) / f(z), contour, tol).value / TWO_PI_I
    k = round(raw.real)
    if abs(raw - k) > 1e-3:
        raise NumericFailure(f"zero count {raw} is not close to an integer",
                             best=raw)
    return k
