"""The coefficient sequences f_m(d,i) and b_m(d,i) and their transforms.

f_m carries the KL coefficients through c = binom(d+2m,i+m) binom(d-i-1,i)
f_m(d,i) / binom(d+2m,m); b_m plays the same role for the Z-polynomial.
Both are polynomials in i of degree 2(m-1); expanding them in the falling
factorial basis produces g_{m,k}(d) resp. y_{m,k}(d), and from those the
polynomials G_{m,d}(t), Y_{m,d}(t) whose real-rootedness drives the
d-sequence argument, alongside Q_d(t) and R_d(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import binomial, falling_factorial
from .certificate import Certificate, Stopwatch
from .polyring import (IntegrityError, ONE, Poly, X, as_poly,
                       expand_binomial_affine, to_falling_basis)

FAMILIES = ("f", "b")


@dataclass(frozen=True)
class SeqSpec:
    """Which sequence family (f or b) at which m."""

    family: str
    m: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be 'f' or 'b', got {self.family!r}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")


def seq_value(spec: SeqSpec, d: int, i: int) -> Fraction:
    """Direct numeric evaluation of f_m(d,i) or b_m(d,i)."""
    if not 0 <= i <= d:
        raise ValueError(f"sequence index i={i} out of range [0, {d}]")
    m = spec.m
    total = Fraction(0)
    for h in range(m):
        b_ih = 1 if h == 0 else binomial(i - 1 + h, h)
        b_dh = binomial(d - i + h, h)
        if spec.family == "f":
            total += (Fraction(1, (m - h) * binomial(m, h))
                      * binomial(i + m, m - h - 1) * b_ih * b_dh)
        else:
            total += Fraction(i * (h - m + 1) + m, (h + 1) * m) * b_ih * b_dh
    return total


@lru_cache(maxsize=None)
def symbolic_in_i(spec: SeqSpec) -> Poly:
    """The defining sum expanded as a polynomial in i with Poly-in-d coefficients."""
    m = spec.m
    i_var = X
    d_var = X  # the inner variable; kept distinct by nesting level
    total = Poly()
    for h in range(m):
        b_ih = expand_binomial_affine(i_var + (h - 1), h)
        # binom(d-i+h, h): affine in i with constant part d+h.
        b_dh = expand_binomial_affine(Poly((d_var + h, Fraction(-1))), h)
        if spec.family == "f":
            pref = expand_binomial_affine(i_var + m, m - h - 1) * Fraction(1, (m - h) * binomial(m, h))
        else:
            pref = Poly((Fraction(1, h + 1), Fraction(h - m + 1, (h + 1) * m)))
        total = total + pref * b_ih * b_dh
    return total


@lru_cache(maxsize=None)
def expand_falling(spec: SeqSpec) -> tuple[Poly, ...]:
    """Falling-factorial coefficients g_{m,k}(d) (family f) or y_{m,k}(d) (family b)."""
    return tuple(as_poly(g) for g in to_falling_basis(symbolic_in_i(spec)))


def seq_value_from_falling(spec: SeqSpec, d: int, i: int) -> Fraction:
    """Re-evaluate the falling-basis expansion; the round-trip cross-check."""
    total = Fraction(0)
    for k, g in enumerate(expand_falling(spec)):
        total += g.eval(Fraction(d)) * falling_factorial(Fraction(i), k)
    return total


def gy_poly(spec: SeqSpec, d: int | None = None) -> Poly:
    """G_{m,d}(t) (family f) or Y_{m,d}(t) (family b).

    With d None the result is symbolic: a polynomial in t whose
    coefficients g_{m,k}(d) (d)_k are polynomials in d.
    """
    gs = expand_falling(spec)
    if d is None:
        return Poly(tuple(g * falling_factorial(X, k) for k, g in enumerate(gs)))
    return Poly(tuple(g.eval(Fraction(d)) * falling_factorial(Fraction(d), k)
                      for k, g in enumerate(gs)))


def qr_poly(spec: SeqSpec, d: int) -> Poly:
    """Q_d(t) (family f) or R_d(t) (family b) at the given d.

    Also verifies the exact factorization
    Q_d(t) = sum_k g_{m,k}(d) (d)_k t^k (1+t)^{d-k}, which is how the
    d-sequence test reduces to G_{m,d}.
    """
    if d < 1:
        raise ValueError(f"qr_poly requires d >= 1, got {d}")
    q = Poly(tuple(seq_value(spec, d, i) * binomial(d, i) for i in range(d + 1)))
    one_plus_t = ONE + X
    alt = Poly()
    for k, g in enumerate(expand_falling(spec)):
        alt = alt + (g.eval(Fraction(d)) * falling_factorial(Fraction(d), k)
                     * X ** k * one_plus_t ** (d - k) if k <= d else Poly())
    if alt != q:
        raise IntegrityError(
            f"factorization identity failed for {spec.family}_{spec.m} at d={d}")
    return q


def base_real_rooted_polys(m: int, d: int) -> tuple[Poly, Poly, Poly]:
    """The three base polynomials whose real-rootedness is already known.

    Returns (KL base, Fibonacci truncation, Z base):
      sum binom(d+2m,i+m) binom(d-i-1,i) t^i,
      sum binom(d-i-1,i) t^i,
      sum binom(d+2m,i+m) binom(d,i) t^i.
    The overall 1/binom(d+2m,m) normalization is omitted; it moves no zeros.
    """
    if m < 1 or d < 1:
        raise ValueError("base polynomials require m, d >= 1")
    top = (d - 1) // 2
    kl_base = Poly(tuple(Fraction(binomial(d + 2 * m, i + m) * binomial(d - i - 1, i))
                         for i in range(top + 1)))
    fib_trunc = fibonacci_truncation(d)
    z_base = Poly(tuple(Fraction(binomial(d + 2 * m, i + m) * binomial(d, i))
                        for i in range(d + 1)))
    return kl_base, fib_trunc, z_base


def fibonacci_truncation(d: int) -> Poly:
    """sum_i binom(d-i-1, i) t^i, the ascending companion of F_d."""
    return Poly(tuple(Fraction(binomial(d - i - 1, i)) for i in range((d - 1) // 2 + 1)))


def fibonacci_poly(d: int) -> Poly:
    """The Fibonacci polynomial F_d(t) = sum_i binom(d-i-1, i) t^{d-2i-1}."""
    if d < 1:
        raise ValueError(f"fibonacci_poly requires d >= 1, got {d}")
    coeffs = [Fraction(0)] * d
    for i in range((d - 1) // 2 + 1):
        coeffs[d - 2 * i - 1] = Fraction(binomial(d - i - 1, i))
    return Poly(coeffs)


def kl_reformulation_check(m_max: int, d_max: int) -> Certificate:
    """Check the f/b reformulations of the KL and Z coefficients exactly.

    c(m,d,i) binom(d+2m,m) = binom(d+2m,i+m) binom(d-i-1,i) f_m(d,i) and
    z(m,d,i) binom(d+2m,m) = binom(d+2m,i+m) binom(d,i)     b_m(d,i).
    """
    from .klcoeff import kl_coefficient, max_index
    from .zcoeff import z_coefficient
    watch = Stopwatch()
    subject = f"reformulation m<={m_max} d<={d_max}"
    checked = 0
    for m in range(1, m_max + 1):
        f_spec, b_spec = SeqSpec("f", m), SeqSpec("b", m)
        for d in range(1, d_max + 1):
            denom = binomial(d + 2 * m, m)
            for i in range(max_index(d) + 1):
                lhs = kl_coefficient(m, d, i) * denom
                rhs = (binomial(d + 2 * m, i + m) * binomial(d - i - 1, i)
                       * seq_value(f_spec, d, i))
                if lhs != rhs:
                    return watch.done(subject, "identity", {
                        "side": "kl", "m": m, "d": d, "i": i,
                        "lhs": str(lhs), "rhs": str(rhs)})
                checked += 1
            for i in range(d + 1):
                lhs = z_coefficient(m, d, i) * denom
                rhs = (binomial(d + 2 * m, i + m) * binomial(d, i)
                       * seq_value(b_spec, d, i))
                if lhs != rhs:
                    return watch.done(subject, "identity", {
                        "side": "z", "m": m, "d": d, "i": i,
                        "lhs": str(lhs), "rhs": str(rhs)})
                checked += 1
    return watch.done(subject, "identity", None, {"checked": checked})


def diagonal_value(m: int, d: int) -> Fraction:
    """f_m(d,d), which collapses to binom(m+d-1, m-1)."""
    return seq_value(SeqSpec("f", m), d, d)
