"""Divisors on the Riemann sphere, Riemann-Roch bookkeeping, branched covers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalConsistencyError, NotSquarefreeError
from .numeric import (
    P1Point,
    Polynomial,
    RationalFunction,
    ord_at,
    poly_roots,
    principal_divisor_entries,
)

POINT_MATCH_TOL = 1e-9


class Divisor:
    """Finite integer-weighted set of points of the Riemann sphere.

    Finite points built from floating data are identified when they lie
    within POINT_MATCH_TOL * (1 + |p|) of each other; zero coefficients are
    dropped.
    """

    def __init__(self, entries=()):
        self._points = []   # P1Point
        self._coeffs = []   # int
        for point, coeff in entries:
            self._add(point, coeff)

    def _add(self, point, coeff):
        if coeff == 0:
            return
        for i, q in enumerate(self._points):
            if _same_point(q, point):
                self._coeffs[i] += coeff
                if self._coeffs[i] == 0:
                    del self._points[i]
                    del self._coeffs[i]
                return
        self._points.append(point)
        self._coeffs.append(int(coeff))

    def items(self):
        return list(zip(self._points, self._coeffs))

    @property
    def degree(self):
        return sum(self._coeffs)

    def coefficient(self, point):
        for q, c in zip(self._points, self._coeffs):
            if _same_point(q, point):
                return c
        return 0

    def __add__(self, other):
        return Divisor(self.items() + other.items())

    def __neg__(self):
        return Divisor([(p, -c) for p, c in self.items()])

    def __sub__(self, other):
        return self + (-other)

    def __len__(self):
        return len(self._points)

    def is_effective(self):
        return all(c >= 0 for c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        if len(self) != len(other):
            return False
        return all(other.coefficient(p) == c for p, c in self.items())

    def to_json(self):
        """[{point: "inf" | [re, im], coeff: n}, ...], deterministically sorted."""
        out = []
        for p, c in self.items():
            key = "inf" if p.is_infinity else [p.value.real, p.value.imag]
            out.append({"point": key, "coeff": c})
        out.sort(key=lambda e: (0, 0.0, 0.0) if e["point"] == "inf"
                 else (1, e["point"][0], e["point"][1]))
        return out

    def __repr__(self):
        parts = []
        for p, c in sorted(
            self.items(),
            key=lambda t: (1, 0.0) if t[0].is_infinity else (0, t[0].value.real),
        ):
            name = "inf" if p.is_infinity else f"{p.value:.6g}"
            parts.append(f"{c:+d}({name})")
        return "Divisor(" + " ".join(parts) + ")" if parts else "Divisor(0)"


def _same_point(a: P1Point, b: P1Point):
    if a.is_infinity or b.is_infinity:
        return a.is_infinity and b.is_infinity
    return abs(a.value - b.value) <= POINT_MATCH_TOL * (1.0 + abs(b.value))


def principal_divisor(f: RationalFunction) -> Divisor:
    """div(f): orders of vanishing at all zeros/poles plus infinity.

    Degree zero is asserted; a failure means the root finder lost a point.
    """
    div = Divisor(principal_divisor_entries(f))
    if div.degree != 0:
        raise InternalConsistencyError(f"principal divisor has degree {div.degree}")
    return div


def form_divisor(f: RationalFunction) -> Divisor:
    """Divisor of the meromorphic 1-form f(z) dz on the sphere.

    Finite orders agree with those of f; at infinity the substitution
    w = 1/z, dz = -dw/w^2 lowers the order by 2.  Total degree is -2, the
    degree of a canonical divisor in genus 0.
    """
    entries = [
        (p, c)
        for p, c in principal_divisor_entries(f)
        if not p.is_infinity
    ]
    entries.append((P1Point.infinity(), ord_at(f, P1Point.infinity()) - 2))
    div = Divisor(entries)
    if div.degree != -2:
        raise InternalConsistencyError(f"canonical degree {div.degree} != -2")
    return div


def h0_Om(m: int):
    """(dimension, monomial exponent basis) of the global sections of O(m).

    m >= 0 gives the polynomials of degree <= m (dimension m + 1); negative
    twists have no nonzero sections.
    """
    if m < 0:
        return 0, []
    return m + 1, list(range(m + 1))


def section_divisor_Om(m: int, s0: Polynomial) -> Divisor:
    """Zero divisor of a degree-<=m polynomial viewed as a section of O(m).

    Affine zeros keep their multiplicities and infinity carries m - deg s0;
    the total degree is m.
    """
    if s0.is_zero():
        raise DomainError("the zero section has no divisor")
    d = s0.degree
    if d > m:
        raise DomainError(f"deg s0 = {d} exceeds the twist m = {m}")
    entries = []
    if d >= 1:
        entries = [(P1Point.finite(r), mult) for r, mult in poly_roots(s0)]
    entries.append((P1Point.infinity(), m - d))
    div = Divisor(entries)
    if div.degree != m:
        raise InternalConsistencyError("section divisor degree mismatch")
    return div


def ell_P1(D: Divisor):
    """(dim, basis) of L(D) = {f : (f) + D >= 0} on the sphere.

    The dimension is max(deg D + 1, 0).  The basis comes from moving D to
    deg(D) * [infinity] with the explicit rational multiplier
    h = prod (z - p)^{D(p)} and pulling back the monomials 1, z, ..., z^deg.
    Every basis element is verified via its principal divisor.
    """
    n = D.degree
    if n < 0:
        return 0, []
    hnum = Polynomial([1])
    hden = Polynomial([1])
    for p, c in D.items():
        if p.is_infinity:
            continue
        lin = Polynomial([-p.value, 1])
        if c > 0:
            hnum = hnum * lin**c
        else:
            hden = hden * lin**(-c)
    basis = []
    zpow = Polynomial([1])
    for k in range(n + 1):
        f = RationalFunction(zpow * hden, hnum)
        if not (principal_divisor(f) + D).is_effective():
            raise InternalConsistencyError("basis element violates (f) + D >= 0")
        basis.append(f)
        zpow = zpow * Polynomial([0, 1])
    return n + 1, basis


def rr_verify(g: int, degD: int, ellD: int, ellKD: int) -> bool:
    """Riemann-Roch identity check: l(D) - l(K-D) = 1 - g + deg D."""
    if g < 0:
        raise DomainError("genus must be nonnegative")
    return ellD - ellKD == 1 - g + degD


def ell_elliptic(degD: int) -> int:
    """l(D) on a genus-1 curve for deg D > 0, which is deg D."""
    if degD <= 0:
        raise DomainError("only the positive-degree case is implemented")
    return degD


@dataclass(frozen=True)
class DoubleCoverSpec:
    """The double cover y^2 = f(x) of the sphere; f must be squarefree."""

    f: Polynomial

    def __post_init__(self):
        if self.f.degree < 1:
            raise DomainError("need deg f >= 1")


def branch_values(spec: DoubleCoverSpec):
    """Branch locus of the projection (x, y) -> x: roots of f, plus infinity
    when deg f is odd."""
    vals = []
    for r, m in poly_roots(spec.f):
        if m > 1:
            raise NotSquarefreeError(f"f has a repeated root at {r}")
        vals.append(P1Point.finite(r))
    if spec.f.degree % 2 == 1:
        vals.append(P1Point.infinity())
    return vals


def genus_double_cover(spec: DoubleCoverSpec) -> int:
    """Genus (B - 2)/2 from the count B of simple branch values."""
    b = len(branch_values(spec))
    if b % 2 != 0:
        raise InternalConsistencyError(f"odd branch count {b}")
    return (b - 2) // 2


def kummer_ram_index(n: int, m: int) -> int:
    """Ramification index over a branch point of y^n = (x-a)^m (units aside):
    n / gcd(n, m)."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return n // math.gcd(n, m % n)


def fta_verify(p: Polynomial) -> bool:
    """Degree-n polynomials have exactly n zeros: three independent counts.

    Compares deg p, the sum of root multiplicities, and the pole order of p
    at infinity (as a rational function).
    """
    if p.degree < 1:
        raise DomainError("need deg p >= 1")
    root_count = sum(m for _, m in poly_roots(p))
    pole_order_inf = -ord_at(RationalFunction(p, Polynomial([1])), P1Point.infinity())
    return root_count == p.degree == pole_order_inf
