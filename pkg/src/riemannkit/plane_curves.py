"""Exact local intersection multiplicity of plane curves and Bezout totals.

Everything here runs over the rationals: bivariate polynomials with Fraction
coefficients, Sylvester resultants evaluated by fraction-free Bareiss
elimination, and rational-root extraction for point listing.  No floating
point enters any multiplicity.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    CommonComponentError,
    DomainError,
    InternalConsistencyError,
    UnsupportedConfigurationError,
)
from .numeric import Polynomial, poly_gcd_exact


class BivariatePolynomialQ:
    """Polynomial in x, y with exact rational coefficients.

    Stored as a mapping (i, j) -> Fraction with no zero values; (i, j) are
    the exponents of x and y.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for (i, j), c in dict(terms).items():
            c = Fraction(c)
            if c != 0:
                if i < 0 or j < 0:
                    raise DomainError("exponents must be nonnegative")
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomialQ is immutable")

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BivariatePolynomialQ(out)

    def __neg__(self):
        return BivariatePolynomialQ({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomialQ(
                {k: c * other for k, c in self.terms.items()}
            )
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BivariatePolynomialQ(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BivariatePolynomialQ({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomialQ) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    # -- structure -------------------------------------------------------
    def total_degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def order_at_origin(self):
        """Minimum total degree among monomials (the point multiplicity m0)."""
        if self.is_zero():
            raise DomainError("the zero polynomial has no order")
        return min(i + j for i, j in self.terms)

    def initial_form(self):
        m0 = self.order_at_origin()
        return BivariatePolynomialQ(
            {k: c for k, c in self.terms.items() if k[0] + k[1] == m0}
        )

    def degree_y(self):
        return max((j for _, j in self.terms), default=-1)

    def degree_x(self):
        return max((i for i, _ in self.terms), default=-1)

    def coeffs_in_y(self):
        """Coefficients of powers of y, each a Polynomial over Fraction in x."""
        d = self.degree_y()
        cols = [dict() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            cols[j][i] = c
        out = []
        for col in cols:
            size = max(col) + 1 if col else 0
            out.append(Polynomial([col.get(i, Fraction(0)) for i in range(size)]))
        return out

    def eval(self, x, y):
        x, y = Fraction(x), Fraction(y)
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def at_x0(self, x0):
        """f(x0, y) as a univariate Polynomial in y over Fraction."""
        x0 = Fraction(x0)
        d = self.degree_y()
        out = [Fraction(0)] * (d + 1)
        for (i, j), c in self.terms.items():
            out[j] += c * x0**i
        return Polynomial(out)

    def substitute_y(self, h: Polynomial) -> Polynomial:
        """f(x, h(x)) as a univariate Polynomial in x over Fraction."""
        ypows = [Polynomial([Fraction(1)])]
        for _ in range(self.degree_y()):
            ypows.append(ypows[-1] * h)
        acc = Polynomial([])
        for (i, j), c in self.terms.items():
            xpow = [Fraction(0)] * i + [c]
            acc = acc + Polynomial(xpow) * ypows[j]
        return acc

    def translate(self, a, b):
        """f(x + a, y + b), exactly."""
        a, b = Fraction(a), Fraction(b)
        out = {}
        for (i, j), c in self.terms.items():
            for p in range(i + 1):
                xi = c * math.comb(i, p) * a ** (i - p)
                for q in range(j + 1):
                    k = (p, q)
                    out[k] = out.get(k, Fraction(0)) + xi * math.comb(j, q) * b ** (j - q)
        return BivariatePolynomialQ(out)

    def shear_x(self, lam):
        """f(x + lam*y, y)."""
        lam = Fraction(lam)
        out = {}
        for (i, j), c in self.terms.items():
            for p in range(i + 1):
                k = (p, j + i - p)
                out[k] = out.get(k, Fraction(0)) + c * math.comb(i, p) * lam ** (i - p)
        return BivariatePolynomialQ(out)

    def swapped(self):
        """f(y, x)."""
        return BivariatePolynomialQ({(j, i): c for (i, j), c in self.terms.items()})

    def content_x(self):
        """gcd over Q[x] of the y-coefficients (monic, or zero)."""
        g = Polynomial([])
        for p in self.coeffs_in_y():
            if p.is_zero():
                continue
            g = p if g.is_zero() else poly_gcd_exact(g, p)
            if g.degree == 0:
                return g
        return g

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (i, j), c in sorted(self.terms.items()):
            s = str(c)
            if i:
                s += f"*x^{i}" if i > 1 else "*x"
            if j:
                s += f"*y^{j}" if j > 1 else "*y"
            bits.append(s)
        return " + ".join(bits)


def _bareiss_determinant(matrix):
    """Fraction-free Bareiss determinant of a square matrix of Polynomials."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    prev = Polynomial([Fraction(1)])
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial([])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = num.divmod(prev)
                if not r.is_zero():
                    raise InternalConsistencyError("Bareiss division not exact")
                m[i][j] = q
            m[i][k] = Polynomial([])
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant_y(f: BivariatePolynomialQ, g: BivariatePolynomialQ) -> Polynomial:
    """Sylvester resultant eliminating y; a Polynomial in x over Fraction."""
    fc = f.coeffs_in_y()
    gc = g.coeffs_in_y()
    m, n = len(fc) - 1, len(gc) - 1
    if m < 0 or n < 0:
        raise DomainError("resultant of the zero polynomial")
    if m == 0 and n == 0:
        raise DomainError("neither curve involves y; nothing to eliminate")
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    zero = Polynomial([])
    rows = []
    frow = list(reversed(fc))  # leading coefficient first
    grow = list(reversed(gc))
    for k in range(n):
        rows.append([zero] * k + frow + [zero] * (size - m - 1 - k))
    for k in range(m):
        rows.append([zero] * k + grow + [zero] * (size - n - 1 - k))
    return _bareiss_determinant(rows)


def _ord_x(p: Polynomial) -> int:
    """Order of vanishing of a Q[x] polynomial at x = 0."""
    if p.is_zero():
        raise DomainError("order of the zero polynomial is undefined")
    for k, c in enumerate(p.coeffs):
        if c != 0:
            return k
    raise InternalConsistencyError("unreachable")


def multiplicity_point(f: BivariatePolynomialQ) -> int:
    """Multiplicity of the curve f = 0 at the origin (order of f)."""
    return f.order_at_origin()


def mult_origin_graph(f: BivariatePolynomialQ, h: Polynomial) -> int:
    """Intersection multiplicity at 0 of f = 0 with the graph y = h(x).

    Requires f(0,0) = 0 and h(0) = 0; the multiplicity is the order at x = 0
    of the exact substitution f(x, h(x)).
    """
    if f.is_zero():
        raise DomainError("f must be nonzero")
    if f.eval(0, 0) != 0:
        raise DomainError("f does not pass through the origin")
    if not h.is_zero() and h(Fraction(0)) != 0:
        raise DomainError("the graph must pass through the origin")
    sub = f.substitute_y(Polynomial([Fraction(c) for c in h.coeffs]))
    if sub.is_zero():
        raise CommonComponentError("the graph is a component of the curve")
    return _ord_x(sub)


def _check_coprime(f, g):
    if f.is_zero() or g.is_zero():
        raise DomainError("curves must be nonzero")
    cf, cg = f.content_x(), g.content_x()
    if not cf.is_zero() and not cg.is_zero() and cf.degree > 0 and cg.degree > 0:
        if poly_gcd_exact(cf, cg).degree > 0:
            raise CommonComponentError("common factor independent of y")


def mult_origin_resultant(f: BivariatePolynomialQ, g: BivariatePolynomialQ) -> int:
    """Intersection multiplicity at the origin via the Sylvester resultant.

    Preconditions: both curves pass through the origin, they share no
    component, and the origin is their only common point on the line x = 0
    (detected by the gcd of f(0,y) and g(0,y) being a power of y).
    """
    _check_coprime(f, g)
    if f.eval(0, 0) != 0 or g.eval(0, 0) != 0:
        raise DomainError("both curves must pass through the origin")
    f0, g0 = f.at_x0(0), g.at_x0(0)
    if f0.is_zero() and g0.is_zero():
        raise CommonComponentError("both curves contain the line x = 0")
    restriction = g0 if f0.is_zero() else f0 if g0.is_zero() else poly_gcd_exact(f0, g0)
    if not _is_power_of_y(restriction):
        raise DomainError(
            "common zeros on the line x = 0 away from the origin; "
            "shift coordinates first"
        )
    if f.degree_y() == 0 and g.degree_y() == 0:
        raise DomainError("neither equation involves y; eliminate x instead")
    res = resultant_y(f, g)
    if res.is_zero():
        raise CommonComponentError("resultant vanishes identically")
    return _ord_x(res)


def _is_power_of_y(p: Polynomial) -> bool:
    """True when p(y) = c * y^k (all lower coefficients zero)."""
    if p.is_zero():
        return False
    return all(c == 0 for c in p.coeffs[:-1])


def tangent_cone_check(f: BivariatePolynomialQ, g: BivariatePolynomialQ):
    """(bound, multiplicity, equality) for the tangent-cone lower bound.

    bound = m0(f) * m0(g) and multiplicity >= bound always; equality holds
    exactly when the initial forms are coprime.  Both relations are asserted.
    """
    bound = multiplicity_point(f) * multiplicity_point(g)
    mult = mult_origin_resultant(f, g)
    coprime = _initial_forms_coprime(f.initial_form(), g.initial_form())
    if mult < bound:
        raise InternalConsistencyError("multiplicity fell below m0(f) m0(g)")
    if coprime != (mult == bound):
        raise InternalConsistencyError("equality criterion mismatch")
    return bound, mult, coprime


def _initial_forms_coprime(a: BivariatePolynomialQ, b: BivariatePolynomialQ) -> bool:
    """Whether two homogeneous binary forms share a projective zero.

    The zero [0:1] is shared iff x divides both; every other common zero
    [1:t] is a common root of the dehomogenizations a(1, y), b(1, y).
    """
    if all(i >= 1 for i, _ in a.terms) and all(i >= 1 for i, _ in b.terms):
        return False
    ay = a.at_x0(1)
    by = b.at_x0(1)
    if ay.degree <= 0 or by.degree <= 0:
        # one form is a pure power of x and the other is not divisible by x
        return True
    return poly_gcd_exact(ay, by).degree == 0


# -- Bezout on the projective plane --------------------------------------


class HomogeneousTernaryQ:
    """Homogeneous polynomial in X, Y, Z over the rationals."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms):
        clean = {}
        degs = set()
        for (i, j, k), c in dict(terms).items():
            c = Fraction(c)
            if c != 0:
                clean[(int(i), int(j), int(k))] = c
                degs.add(i + j + k)
        if len(degs) > 1:
            raise DomainError(f"not homogeneous: degrees {sorted(degs)}")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", degs.pop() if degs else -1)

    def __setattr__(self, name, value):
        raise AttributeError("HomogeneousTernaryQ is immutable")

    def is_zero(self):
        return not self.terms

    def chart(self, which):
        """Dehomogenize: which in {"z","y","x"} sets that variable to 1.

        Charts keep a consistent (x, y) ordering: z-chart -> (X, Y),
        y-chart -> (X, Z), x-chart -> (Y, Z).
        """
        pick = {"z": (0, 1), "y": (0, 2), "x": (1, 2)}[which]
        out = {}
        for (i, j, k), c in self.terms.items():
            e = (i, j, k)
            key = (e[pick[0]], e[pick[1]])
            out[key] = out.get(key, Fraction(0)) + c
        return BivariatePolynomialQ(out)

    def restrict_to_line_z0(self):
        """The binary form F(X, Y, 0) as a BivariatePolynomialQ in (X, Y)."""
        return BivariatePolynomialQ(
            {(i, j): c for (i, j, k), c in self.terms.items() if k == 0}
        )


def _rational_roots(p: Polynomial):
    """[(root, multiplicity)] over Q, plus the nonrational leftover factor."""
    if p.is_zero():
        raise DomainError("zero polynomial")
    coeffs = list(p.coeffs)
    shift = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    roots = [(Fraction(0), shift)] if shift else []
    q = Polynomial(coeffs)
    # clear denominators to integers
    den_lcm = 1
    for c in q.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in q.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g:
        ints = [v // g for v in ints]

    def divisors(n):
        n = abs(n)
        if n == 0:
            return [1]
        if n > 10**12:
            raise UnsupportedConfigurationError("coefficients too large to factor")
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return sorted(out)

    while q.degree >= 1:
        ints = [int(c * _den_lcm(q)) for c in q.coeffs]
        found = None
        for pnum in divisors(ints[0]):
            for qden in divisors(ints[-1]):
                for sign in (1, -1):
                    cand = Fraction(sign * pnum, qden)
                    if q(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        mult = 0
        lin = Polynomial([-found, Fraction(1)])
        while True:
            quo, rem = q.divmod(lin)
            if not rem.is_zero():
                break
            q = quo
            mult += 1
            if q.is_zero():
                break
        roots.append((found, mult))
    return roots, q


def _den_lcm(q: Polynomial):
    acc = 1
    for c in q.coeffs:
        acc = acc * c.denominator // math.gcd(acc, c.denominator)
    return acc


def _local_multiplicity(f: BivariatePolynomialQ, g: BivariatePolynomialQ) -> int:
    """Intersection multiplicity at the origin, trying shears when the
    direct resultant preconditions fail."""
    attempts = [(lambda h: h, lambda h: h)]
    attempts.append((lambda h: h.swapped(), lambda h: h.swapped()))
    for lam in (1, -1, 2, -2, 3, 5):
        attempts.append(
            (lambda h, L=lam: h.shear_x(L), lambda h, L=lam: h.shear_x(L))
        )
    last = None
    for tf, tg in attempts:
        try:
            return mult_origin_resultant(tf(f), tg(g))
        except CommonComponentError:
            raise
        except DomainError as exc:
            last = exc
    raise UnsupportedConfigurationError(f"local multiplicity failed: {last}")


def bezout_verify(F: HomogeneousTernaryQ, G: HomogeneousTernaryQ):
    """All intersection points of two coprime projective curves with their
    local multiplicities; the total must equal deg F * deg G.

    Points are located chart by chart (the affine chart Z = 1, then the line
    Z = 0).  Points with rational coordinates are listed individually;
    conjugate clusters of irrational points over an irreducible factor of the
    eliminant are aggregated without being separated.  Returns
    (entries, total) with entries of the form (chart, point_or_None, mult).
    """
    if F.is_zero() or G.is_zero():
        raise DomainError("curves must be nonzero")
    d1, d2 = F.degree, G.degree
    entries = []
    total = 0

    # --- affine chart Z = 1 ---
    f = F.chart("z")
    g = G.chart("z")
    if f.is_zero() or g.is_zero():
        # one curve is the line at infinity itself (F = c Z^d); no affine part
        pass
    else:
        affine_pairs = _affine_intersections(f, g)
        for x0, y0, mult in affine_pairs:
            entries.append(("affine", (x0, y0), mult))
            total += mult
        cluster = _affine_cluster_total(f, g, affine_pairs)
        if cluster:
            entries.append(("affine", None, cluster))
            total += cluster

    # --- points on the line Z = 0 ---
    a = F.restrict_to_line_z0()
    b = G.restrict_to_line_z0()
    if a.is_zero() and b.is_zero():
        raise CommonComponentError("both curves contain the line Z = 0")
    line_points = _line_z0_points(a if not a.is_zero() else b,
                                  b if not a.is_zero() else a)
    for X0, Y0 in line_points:
        mult = _multiplicity_at_projective_point(F, G, (X0, Y0, Fraction(0)))
        entries.append(("line_at_infinity", (X0, Y0), mult))
        total += mult

    if total != d1 * d2:
        raise UnsupportedConfigurationError(
            f"accounted multiplicity {total} != {d1 * d2}; "
            "an intersection point could not be resolved exactly"
        )
    return entries, total


def _affine_intersections(f, g):
    """Rational common points of two affine curves with multiplicities."""
    if f.degree_y() == 0 and g.degree_y() == 0:
        # both independent of y: common component unless coprime in x
        if poly_gcd_exact(f.coeffs_in_y()[0], g.coeffs_in_y()[0]).degree > 0:
            raise CommonComponentError("common vertical-line component")
        return []
    _check_coprime(f, g)
    res = resultant_y(f, g)
    if res.is_zero():
        raise CommonComponentError("curves share a component")
    if res.degree < 1:
        return []
    xroots, _ = _rational_roots(res)
    out = []
    for x0, _ in xroots:
        fy = f.at_x0(x0)
        gy = g.at_x0(x0)
        if fy.is_zero() or gy.is_zero():
            common = gy if fy.is_zero() else fy
        else:
            common = poly_gcd_exact(fy, gy)
        if common.degree < 1:
            continue
        yroots, _ = _rational_roots(common)
        for y0, _m in yroots:
            mult = _local_multiplicity(f.translate(x0, y0), g.translate(x0, y0))
            out.append((x0, y0, mult))
    return out


def _affine_cluster_total(f, g, listed):
    """Total multiplicity at affine points with irrational coordinates.

    The x-eliminant's vanishing order at x0 sums the local multiplicities
    over the fiber when the y-leading coefficients do not vanish there.  The
    rational roots were divided out when listing individual points, so the
    conjugate clusters contribute exactly the degree of the leftover factor.
    """
    res = resultant_y(f, g) if (f.degree_y() or g.degree_y()) else Polynomial([1])
    if res.degree < 1:
        return 0
    _, leftover = _rational_roots(res)
    if leftover.degree < 1:
        return 0
    # validity: leading y-coefficients must not vanish on the leftover factor
    lf = f.coeffs_in_y()[-1]
    lg = g.coeffs_in_y()[-1]
    for lead in (lf, lg):
        if lead.degree > 0 and poly_gcd_exact(lead, leftover).degree > 0:
            raise UnsupportedConfigurationError(
                "irrational intersection cluster with vanishing leading "
                "coefficient; cannot aggregate"
            )
    return leftover.degree


def _line_z0_points(a, b):
    """Common projective zeros on Z = 0 of two binary forms (one may be the
    zero form, meaning its curve contains the line)."""
    if b.is_zero():
        a, b = b, a
    if a.is_zero():
        candidates = b
        # zeros of b alone
        by = candidates.at_x0(1)          # b(1, Y)
        pts = []
        if all(i >= 1 for i, _ in candidates.terms):
            pts.append((Fraction(0), Fraction(1)))       # [0 : 1 : 0]
        if by.degree >= 1:
            roots, leftover = _rational_roots(by)
            if leftover.degree >= 1:
                raise UnsupportedConfigurationError(
                    "irrational point on the line at infinity"
                )
            pts.extend((Fraction(1), r) for r, _ in roots)
        return pts
    # both nonzero: gcd of dehomogenizations plus the point [0:1:0]
    pts = []
    if all(i >= 1 for i, _ in a.terms) and all(i >= 1 for i, _ in b.terms):
        pts.append((Fraction(0), Fraction(1)))
    ay, by = a.at_x0(1), b.at_x0(1)
    if ay.degree >= 1 and by.degree >= 1:
        g = poly_gcd_exact(ay, by)
        if g.degree >= 1:
            roots, leftover = _rational_roots(g)
            if leftover.degree >= 1:
                raise UnsupportedConfigurationError(
                    "irrational point on the line at infinity"
                )
            pts.extend((Fraction(1), r) for r, _ in roots)
    return pts


def _multiplicity_at_projective_point(F, G, point):
    """Local multiplicity at an exact projective point, chartwise."""
    X0, Y0, Z0 = point
    if Z0 != 0:
        chart, u, v = "z", X0 / Z0, Y0 / Z0
    elif Y0 != 0:
        chart, u, v = "y", X0 / Y0, Z0 / Y0
    else:
        chart, u, v = "x", Y0 / X0, Z0 / X0
    f = F.chart(chart).translate(u, v)
    g = G.chart(chart).translate(u, v)
    return _local_multiplicity(f, g)
