"""Scalar, polynomial and rational-function arithmetic.

Polynomials carry either exact ``fractions.Fraction`` coefficients or complex
floating coefficients; every operation stays inside the coefficient domain it
was given.  On top of them sit truncated Laurent expansions, root finding with
multiplicity clustering, orders of vanishing on the Riemann sphere, and the
coefficient-based radius-of-convergence estimator.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, InternalConsistencyError, NumericFailure

ZERO_TOL = 1e-12
ROOT_CLUSTER_TOL = 1e-8     # roots closer than tol*(1+|root|) are merged
COMMON_ROOT_TOL = 1e-10     # num/den roots closer than this cancel on reduction


def _is_exact_scalar(x):
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def _as_complex(x):
    if isinstance(x, Fraction):
        return complex(x)
    return complex(x)


class Polynomial:
    """Univariate polynomial, coefficients stored ascending from degree 0.

    The zero polynomial has an empty coefficient tuple and degree -1.  The
    leading coefficient of a nonzero polynomial is nonzero (trailing zeros are
    stripped at construction, exactly).
    """

    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        exact = all(_is_exact_scalar(c) for c in coeffs)
        if exact:
            coeffs = [Fraction(c) for c in coeffs]
        else:
            coeffs = [complex(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            exact = True
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, z):
        acc = 0 if self.exact and _is_exact_scalar(z) else 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        """Euclidean division; exact over Fraction, floating otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.degree < other.degree:
            return Polynomial([]), self
        rem = list(self.coeffs)
        quot = [0] * (self.degree - other.degree + 1)
        dlead = other.coeffs[-1]
        for k in range(len(quot) - 1, -1, -1):
            q = rem[other.degree + k] / dlead
            quot[k] = q
            for j, c in enumerate(other.coeffs):
                rem[j + k] -= q * c
        return Polynomial(quot), Polynomial(rem[: other.degree])

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def shifted(self, center):
        """Taylor shift: returns q with q(w) = p(w + center)."""
        if center == 0:
            return self
        out = []  # Horner: out <- out*(w + center) + c, highest coefficient first
        for c in reversed(self.coeffs):
            new = [0] * (len(out) + 1)
            new[0] = c
            for i, v in enumerate(out):
                new[i] += v * center
                new[i + 1] += v
            out = new
        return Polynomial(out)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def norm1(self):
        return sum(abs(_as_complex(c)) for c in self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def poly_gcd_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the rationals (Euclid, exact)."""
    if not (a.exact and b.exact):
        raise DomainError("exact gcd requires Fraction coefficients")
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def _approx_gcd(a: Polynomial, b: Polynomial, tol=1e-10):
    """Euclidean gcd over complex floats with remainder thresholding.

    Reliable only for the desk-scale coefficient sizes this package handles;
    a remainder whose norm falls below tol relative to the inputs is treated
    as zero.
    """
    scale = max(a.norm1(), b.norm1(), 1.0)
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        _, r = a.divmod(b)
        if r.is_zero() or r.norm1() <= tol * scale:
            return b.monic()
        a, b = b, r.monic()
    return a.monic()


def _squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), the polynomial with the same roots all simple."""
    if p.degree <= 1:
        return p
    if p.exact:
        g = poly_gcd_exact(p, p.derivative())
    else:
        g = _approx_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    q, _ = p.divmod(g)
    return q


def poly_roots(p: Polynomial, tol=1e-8, max_newton=6):
    """All complex roots of p with multiplicities.

    Roots are located by the companion-matrix eigenvalues of the squarefree
    part (so multiple roots do not degrade accuracy), polished by Newton on
    the squarefree part, and assigned multiplicities by nearest-center
    clustering of the full root set.  Clusters closer than
    ``ROOT_CLUSTER_TOL * (1 + |root|)`` are merged.

    Returns a list of (root, multiplicity) sorted by (Re, Im); multiplicities
    sum to deg p.
    """
    if p.degree < 1:
        raise DomainError("poly_roots requires deg p >= 1")
    cp = Polynomial([_as_complex(c) for c in p.coeffs])

    sf = _squarefree_part(cp).monic()
    centers = list(np.roots(list(reversed([_as_complex(c) for c in sf.coeffs]))))
    dsf = sf.derivative()
    for _ in range(max_newton):
        centers = [
            r - sf(r) / dsf(r) if abs(dsf(r)) > ZERO_TOL else r for r in centers
        ]

    all_roots = np.roots(list(reversed([_as_complex(c) for c in cp.coeffs])))
    counts = [0] * len(centers)
    ok = len(centers) > 0
    for r in all_roots:
        dists = [abs(r - c) for c in centers]
        j = int(np.argmin(dists))
        counts[j] += 1
        if dists[j] > 1e-3 * (1.0 + abs(r)):
            ok = False
    if not ok or 0 in counts:
        # fallback: cluster the raw companion roots directly
        centers, counts = [], []
        for r in sorted(all_roots, key=lambda w: (w.real, w.imag)):
            for j, c in enumerate(centers):
                if abs(r - c) <= 1e-6 * (1.0 + abs(c)):
                    centers[j] = (centers[j] * counts[j] + r) / (counts[j] + 1)
                    counts[j] += 1
                    break
            else:
                centers.append(complex(r))
                counts.append(1)

    # merge centers that ended up within the cluster radius
    merged = []
    for c, m in sorted(zip(centers, counts), key=lambda t: (t[0].real, t[0].imag)):
        for k, (c2, m2) in enumerate(merged):
            if abs(c - c2) <= ROOT_CLUSTER_TOL * (1.0 + abs(c2)):
                merged[k] = ((c2 * m2 + c * m) / (m + m2), m2 + m)
                break
        else:
            merged.append((complex(c), m))

    if sum(m for _, m in merged) != cp.degree:
        raise NumericFailure(
            f"root clustering lost multiplicity: {merged}", best=merged
        )
    scale = cp.norm1()
    for r, _ in merged:
        if abs(cp(r)) > max(tol * scale * (1.0 + abs(r)) ** cp.degree, 1e-6):
            raise NumericFailure(f"root {r} failed residual check", best=merged)
    return merged


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient of two polynomials.

    Over Fraction coefficients the reduction is an exact gcd; over complex
    floats, shared roots (mutual distance < COMMON_ROOT_TOL) are cancelled and
    numerator/denominator rebuilt from the surviving roots.
    """

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.den.is_zero():
            raise DomainError("denominator is identically zero")
        num, den = self.num, self.den
        if num.exact and den.exact:
            g = poly_gcd_exact(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.coeffs[-1]
            num = Polynomial([c / lead for c in num.coeffs])
            den = Polynomial([c / lead for c in den.coeffs])
        else:
            num, den = _reduce_float(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def is_zero(self):
        return self.num.is_zero()

    def derivative(self):
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _reduce_float(num: Polynomial, den: Polynomial):
    num = Polynomial([_as_complex(c) for c in num.coeffs])
    den = Polynomial([_as_complex(c) for c in den.coeffs])
    if num.is_zero() or den.degree == 0 or num.degree == 0:
        lead = den.coeffs[-1]
        return (
            Polynomial([c / lead for c in num.coeffs]),
            Polynomial([c / lead for c in den.coeffs]),
        )
    nroots = poly_roots(num) if num.degree >= 1 else []
    droots = poly_roots(den)
    cancelled = False
    for i in range(len(nroots)):
        for j in range(len(droots)):
            rn, mn = nroots[i]
            rd, md = droots[j]
            if mn and md and abs(rn - rd) < COMMON_ROOT_TOL * (1.0 + abs(rd)):
                k = min(mn, md)
                nroots[i] = (rn, mn - k)
                droots[j] = (rd, md - k)
                cancelled = True
    if not cancelled:
        lead = den.coeffs[-1]
        return (
            Polynomial([c / lead for c in num.coeffs]),
            Polynomial([c / lead for c in den.coeffs]),
        )
    nlead = num.coeffs[-1]
    dlead = den.coeffs[-1]
    num2 = Polynomial([nlead / dlead])
    for r, m in nroots:
        num2 = num2 * Polynomial([-r, 1]) ** m
    den2 = Polynomial([1])
    for r, m in droots:
        den2 = den2 * Polynomial([-r, 1]) ** m
    return num2, den2


@dataclass(frozen=True)
class P1Point:
    """A point of the Riemann sphere: a finite complex value or infinity."""

    value: complex | None = None   # None encodes the point at infinity

    @staticmethod
    def infinity():
        return P1Point(None)

    @staticmethod
    def finite(z):
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("finite point must have finite coordinates")
        return P1Point(z)

    @property
    def is_infinity(self):
        return self.value is None

    def __repr__(self):
        return "inf" if self.is_infinity else f"{self.value!r}"


@dataclass(frozen=True)
class LaurentSegment:
    """Coefficients of a Laurent expansion, exponents n_min .. n_min+len-1."""

    center: complex
    n_min: int
    coeffs: tuple

    def coefficient(self, n):
        if self.n_min <= n < self.n_min + len(self.coeffs):
            return self.coeffs[n - self.n_min]
        return 0

    @property
    def n_max(self):
        return self.n_min + len(self.coeffs) - 1

    @property
    def residue(self):
        """Coefficient of exponent -1 (zero when absent from the window)."""
        return self.coefficient(-1)


def _root_order(p: Polynomial, z0, tol=1e-7):
    """Order of z0 as a root of p (0 when p(z0) != 0)."""
    if p.is_zero():
        raise DomainError("order of the zero polynomial is undefined")
    if p.exact and _is_exact_scalar(z0):
        order = 0
        lin = Polynomial([-Fraction(z0), Fraction(1)])
        while True:
            q, r = p.divmod(lin)
            if not r.is_zero():
                return order
            p, order = q, order + 1
            if p.is_zero():
                return order
    scale = p.norm1() * (1.0 + abs(_as_complex(z0))) ** max(p.degree, 1)
    max_order = p.degree
    order = 0
    lin = Polynomial([-_as_complex(z0), 1.0])
    while order < max_order:
        val = p(_as_complex(z0))
        if abs(val) > tol * max(scale, 1e-300):
            return order
        p, _ = p.divmod(lin)
        order += 1
    return order


def ord_at(f: RationalFunction, p: P1Point) -> int:
    """Order of vanishing of f at p: k with f = (z-p)^k * unit locally.

    Negative at poles; at infinity it is the order of f(1/w) at w = 0, which
    for a reduced quotient equals deg den - deg num.
    """
    if f.is_zero():
        raise DomainError("ord_at of the zero function is undefined")
    if p.is_infinity:
        return f.den.degree - f.num.degree
    return _root_order(f.num, p.value) - _root_order(f.den, p.value)


def laurent_expand(f: RationalFunction, center, n_max: int) -> LaurentSegment:
    """Laurent coefficients of f around center, exponents ord..n_max.

    Performed algebraically: shift both polynomials to the center, factor out
    the powers of w, then divide the power series.  Exact whenever the
    arithmetic is (Fraction coefficients, or float inputs whose intermediate
    quantities stay representable).
    """
    if f.is_zero():
        raise DomainError("cannot expand the zero function")
    exact = f.num.exact and f.den.exact and _is_exact_scalar(center)
    c = Fraction(center) if exact else _as_complex(center)
    num = f.num.shifted(c)
    den = f.den.shifted(c)

    def strip(poly):
        k = 0
        cs = list(poly.coeffs)
        while cs and (cs[0] == 0 if poly.exact else abs(cs[0]) <= ZERO_TOL * poly.norm1()):
            cs.pop(0)
            k += 1
        return k, Polynomial(cs)

    a, num_hat = strip(num)
    b, den_hat = strip(den)
    k = a - b
    if n_max < k:
        raise DomainError(f"window empty: n_max={n_max} < ord={k}")
    count = n_max - k + 1
    d0 = den_hat.coeffs[0]
    out = []
    ncs = list(num_hat.coeffs) + [0] * count
    dcs = list(den_hat.coeffs)
    for i in range(count):
        acc = ncs[i]
        for j in range(1, min(i, len(dcs) - 1) + 1):
            acc -= dcs[j] * out[i - j]
        out.append(acc / d0)
    return LaurentSegment(center=c, n_min=k, coeffs=tuple(out))


def radius_from_coeffs(a) -> float:
    """Radius of convergence estimated by the root test on a coefficient window.

    The limsup of |a_n|^(1/n) is estimated by its maximum over the last half
    of the supplied window.  An all-(numerically-)zero tail makes the estimate
    underflow; by convention the radius is then +inf.
    """
    a = list(a)
    if len(a) < 8:
        raise DomainError("need at least 8 coefficients")
    tail = a[len(a) // 2 :]
    start = len(a) - len(tail)
    est = 0.0
    for offset, c in enumerate(tail):
        n = start + offset
        mag = abs(_as_complex(c))
        if mag > 0.0 and n > 0:
            est = max(est, mag ** (1.0 / n))
    if est == 0.0:
        return math.inf
    return 1.0 / est


def taylor_coeffs_numeric(f, center, radius, count: int):
    """First `count` Taylor coefficients of f at center via circle quadrature.

    Uses the Cauchy coefficient integral a_k = (2 pi i)^-1 oint f/(w-c)^{k+1}
    discretized by the uniform trapezoid rule on |w - c| = radius, which is
    spectrally accurate for f analytic on the closed disk.  Node count is at
    least 4 * count.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    if radius <= 0:
        raise DomainError("radius must be positive")
    n_nodes = max(64, 4 * count)
    theta = 2.0 * math.pi * np.arange(n_nodes) / n_nodes
    w = np.exp(1j * theta)
    vals = np.array([f(complex(center) + radius * wk) for wk in w])
    ks = np.arange(count)
    # a_k = (1/N) sum_j f(c + r e^{i t_j}) e^{-i k t_j} / r^k
    coeffs = (vals[None, :] * np.exp(-1j * np.outer(ks, theta))).mean(axis=1)
    return [complex(coeffs[k]) / radius**k for k in range(count)]


def principal_divisor_entries(f: RationalFunction):
    """(point, order) pairs over all zeros/poles of f plus infinity.

    The raw material of the divisor map; degree sums to zero, which is
    asserted since it silently verifies the root finder found everything.
    """
    if f.is_zero():
        raise DomainError("the zero function has no divisor")
    entries = []
    nmult = 0
    if f.num.degree >= 1:
        for r, m in poly_roots(f.num):
            entries.append((P1Point.finite(r), m))
            nmult += m
    dmult = 0
    if f.den.degree >= 1:
        for r, m in poly_roots(f.den):
            entries.append((P1Point.finite(r), -m))
            dmult += m
    if nmult != f.num.degree or dmult != f.den.degree:
        raise InternalConsistencyError("root multiplicities do not sum to degree")
    inf_ord = f.den.degree - f.num.degree
    if inf_ord != 0:
        entries.append((P1Point.infinity(), inf_ord))
    return entries
