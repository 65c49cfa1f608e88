"""Dense exact polynomial arithmetic.

A :class:`Poly` stores ascending coefficients which are Fractions (the
ordinary univariate case) or themselves Polys in a parameter d (the
"polynomial in t with polynomial-in-d coefficients" case used by the
symbolic machinery).  The same class covers both; nesting one level deeper
gives bivariate polynomials in (i, d).

Also here: falling-factorial basis conversion and exact parametric
determinants via evaluation and interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial, gcd, lcm

from .arith import stirling2


class IntegrityError(RuntimeError):
    """An internal cross-check that should never fail has failed."""


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction))


class Poly:
    """Dense univariate polynomial, coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple.  Coefficients may
    be ints, Fractions, or Polys in another variable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            if not other:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if _is_scalar(other):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division of Poly by zero scalar")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Poly")
        out = Poly((Fraction(1),))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "Poly":
        """Formal derivative with respect to this Poly's own variable."""
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def eval(self, x):
        """Evaluate by Horner's rule; x may be a scalar or a Poly."""
        out = Fraction(0) if _is_scalar(x) else 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __call__(self, x):
        return self.eval(x)

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute the variable by another polynomial."""
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def map_coeffs(self, fn) -> "Poly":
        return Poly(tuple(fn(c) for c in self.coeffs))

    # -- Euclidean structure (Fraction coefficients only) --------------------

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / Fraction(other.leading)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quo), Poly(rem[: other.degree if other.degree > 0 else 0])

    def rem(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]


ZERO = Poly()
ONE = Poly((Fraction(1),))
X = Poly((Fraction(0), Fraction(1)))


def constant(c) -> Poly:
    return Poly((Fraction(c),)) if isinstance(c, int) else Poly((c,))


def as_poly(c) -> Poly:
    """Coerce a scalar to a constant Poly; pass Polys through."""
    return c if isinstance(c, Poly) else constant(c)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (Euclid with content stripping)."""
    a, b = _primitive(p), _primitive(q)
    while b:
        a, b = b, _primitive(a.rem(b))
    if a and a.leading != 1:
        a = a * (1 / Fraction(a.leading))
    return a


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), carrying exactly the distinct roots of p."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    q, r = p.divmod(g)
    if r:
        raise IntegrityError("gcd does not divide its polynomial")
    return q


def _primitive(p: Poly) -> Poly:
    """Scale to integer coefficients with gcd 1 (sign preserved)."""
    if not p:
        return p
    den = lcm(*(Fraction(c).denominator for c in p.coeffs))
    num = reduce(gcd, (abs(Fraction(c).numerator) for c in p.coeffs))
    scale = Fraction(den, num)
    return Poly(tuple(c * scale for c in p.coeffs))


def reverse(p: Poly, n: int) -> Poly:
    """t^n * p(1/t): coefficient j of the output is coefficient n-j of p."""
    if p.degree > n:
        raise ValueError(f"cannot reverse degree-{p.degree} polynomial within bound {n}")
    return Poly(tuple(p.coeff(n - j) for j in range(n + 1)))


def expand_binomial_affine(a: Poly, k: int) -> Poly:
    """Generalized binomial coefficient C(a, k) = prod_{j<k}(a - j) / k!.

    a is a polynomial form (typically affine in i with coefficients in d);
    the result is expanded in the monomial basis.
    """
    if k < 0:
        raise ValueError(f"expand_binomial_affine requires k >= 0, got {k}")
    out = ONE
    for j in range(k):
        out = out * (a - j)
    return out * Fraction(1, factorial(k))


def to_falling_basis(p: Poly) -> list:
    """Coefficients g_k with p(x) = sum_k g_k (x)_k, via Stirling numbers."""
    n = p.degree
    if n < 0:
        return []
    out = [0] * (n + 1)
    for deg, c in enumerate(p.coeffs):
        if not c:
            continue
        for k in range(deg + 1):
            s = stirling2(deg, k)
            if s:
                out[k] = out[k] + c * s
    while out and not out[-1]:
        out.pop()
    return out


def from_falling_basis(gs) -> Poly:
    """Inverse of :func:`to_falling_basis`: sum_k g_k (x)_k as a Poly."""
    out = Poly()
    ff = ONE
    for k, g in enumerate(gs):
        if k:
            ff = ff * (X - (k - 1))
        out = out + ff * g
    return out


# -- exact determinants ------------------------------------------------------


def det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a square Fraction matrix.

    Rows are cleared to integers, then fraction-free Bareiss elimination
    keeps every intermediate an exact minor.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    mat: list[list[int]] = []
    scale = 1
    for r in rows:
        fr = [Fraction(c) for c in r]
        den = lcm(*(c.denominator for c in fr)) if len(fr) > 1 else fr[0].denominator
        scale *= den
        mat.append([int(c * den) for c in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, n):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return Fraction(sign * mat[n - 1][n - 1], scale)


def _entry_eval(entry, x: Fraction) -> Fraction:
    if isinstance(entry, Poly):
        return Fraction(entry.eval(x))
    return Fraction(entry)


def interpolate(points: list[tuple[Fraction, Fraction]]) -> Poly:
    """Exact Lagrange interpolation (Newton form) through distinct points."""
    xs = [p[0] for p in points]
    dd = [p[1] for p in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    out = Poly()
    for i in range(n - 1, -1, -1):
        out = out * (X - xs[i]) + dd[i]
    return out


def det_parametric(rows: list[list], degree_bound: int) -> Poly:
    """Exact determinant of a matrix of Polys-in-d.

    Evaluated at the integer points 0..degree_bound and interpolated back;
    degree_bound must dominate the true determinant degree.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    pts = []
    for k in range(degree_bound + 1):
        x = Fraction(k)
        val = det_fraction([[_entry_eval(e, x) for e in row] for row in rows])
        pts.append((x, val))
    return interpolate(pts)


def det_cofactor(rows: list[list]):
    """Cofactor-expansion determinant; the independent oracle for tests."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    out = 0
    sign = 1
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        out = out + sign * rows[0][j] * det_cofactor(minor)
        sign = -sign
    return out


# -- canonical text rendering ------------------------------------------------


def _render_frac(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def render_in_d(p: Poly) -> str:
    """Compact rendering in descending powers of d, e.g. 'd^2/2 + d/2'."""
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = Fraction(p.coeff(k))
        if not c:
            continue
        num, den = abs(c.numerator), c.denominator
        if k == 0:
            body = _render_frac(abs(c))
        else:
            var = "d" if k == 1 else f"d^{k}"
            body = var if num == 1 else f"{num}*{var}"
            if den != 1:
                body += f"/{den}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def render(p: Poly, var: str = "t") -> str:
    """Canonical ascending rendering, e.g. '1 + 6*t + 6*t^2 + 1*t^3'."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        symbolic = isinstance(c, Poly)
        if symbolic and c.degree == 0:
            c, symbolic = Fraction(c.coeff(0)), False
        if k == 0:
            body = f"({render_in_d(c)})" if symbolic else _render_frac(c)
            neg = False
        else:
            power = var if k == 1 else f"{var}^{k}"
            if symbolic:
                body = f"({render_in_d(c)})*{power}"
                neg = False
            else:
                neg = c < 0
                body = f"{_render_frac(abs(c))}*{power}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
