"""Z-polynomial coefficients of uniform matroids by three routes.

Z_{U_{m,d}}(t) = sum_i z(m,d,i) t^i is assembled from the KL polynomials,
or computed coefficientwise by an alternating closed form and by a positive
closed form; the m = 1 column specializes to Narayana polynomials.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .arith import as_integer, binomial
from .certificate import Certificate, Stopwatch
from .klcoeff import kl_poly
from .polyring import IntegrityError, Poly


def _check_range(m: int, d: int, i: int) -> None:
    if m < 1 or d < 1:
        raise ValueError(f"uniform matroid indices must be positive, got m={m}, d={d}")
    if not 0 <= i <= d:
        raise ValueError(f"Z coefficient index i={i} out of range [0, {d}]")


class ZTable:
    """Shared Z-coefficient cache with provenance and integrity checking."""

    def __init__(self):
        self._entries: dict[tuple[int, int, int], tuple[int, str]] = {}
        self._lock = threading.Lock()

    def record(self, m: int, d: int, i: int, value: int, route: str) -> int:
        if value <= 0:
            raise IntegrityError(f"nonpositive Z coefficient z({m},{d},{i}) = {value} via {route}")
        with self._lock:
            prior = self._entries.get((m, d, i))
            if prior is not None and prior[0] != value:
                raise IntegrityError(
                    f"route disagreement at z({m},{d},{i}): "
                    f"{prior[1]} gave {prior[0]}, {route} gave {value}")
            if prior is None:
                self._entries[(m, d, i)] = (value, route)
        return value


TABLE = ZTable()


@lru_cache(maxsize=None)
def z_from_kl(m: int, d: int, route: str = "positive") -> Poly:
    """Z_{U_{m,d}}(t) = t^d + sum_k binom(d+m, k+m) t^{d-k} P_{U_{m,k}}(t)."""
    _check_range(m, d, 0)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    for k in range(1, d + 1):
        pref = binomial(d + m, k + m)
        p = kl_poly(m, k, route)
        for j, c in enumerate(p.coeffs):
            coeffs[d - k + j] += pref * c
    z = Poly(coeffs)
    for i, c in enumerate(z.coeffs):
        TABLE.record(m, d, i, as_integer(c), "from_kl")
    return z


def z_alternating(m: int, d: int, i: int) -> Fraction:
    """Alternating closed form for z(m,d,i); i = d is a convention, not a value."""
    _check_range(m, d, i)
    if i == d:
        raise ValueError("z_alternating is stated for i <= d-1; z(m,d,d) = 1 by convention")
    total = Fraction(0)
    for h in range(1, m + 1):
        total += (Fraction((-1) ** (h + 1) * h, m)
                  * binomial(i + m, m - h)
                  * binomial(d - i - h + m - 1, m - 1))
    pref = Fraction(binomial(d + 2 * m, i + m) * binomial(d, i), binomial(d + 2 * m, m))
    return pref * total


def z_positive(m: int, d: int, i: int) -> Fraction:
    """Positive closed form for z(m,d,i), valid on the full range 0 <= i <= d."""
    _check_range(m, d, i)
    total = Fraction(0)
    for h in range(m):
        b = 1 if h == 0 else binomial(i - 1 + h, h)
        total += (Fraction(i * (h - m + 1) + m, (h + 1) * m)
                  * b * binomial(d - i + h, h))
    pref = Fraction(binomial(d + m, i + m) * binomial(d + m, i), binomial(d + m, m))
    return pref * total


def z_coefficient(m: int, d: int, i: int, route: str = "positive") -> int:
    """z(m,d,i) by the requested route, integrality-checked and cached."""
    if route == "from_kl":
        return as_integer(z_from_kl(m, d).coeff(i))
    if route == "alternating":
        value = Fraction(1) if i == d else z_alternating(m, d, i)
    elif route == "positive":
        value = z_positive(m, d, i)
    else:
        raise ValueError(f"unknown Z route {route!r}")
    return TABLE.record(m, d, i, as_integer(value), route)


def z_poly(m: int, d: int, route: str = "positive") -> Poly:
    if route == "from_kl":
        return z_from_kl(m, d)
    return Poly(tuple(Fraction(z_coefficient(m, d, i, route)) for i in range(d + 1)))


def verify_three_routes(m_max: int, d_max: int) -> Certificate:
    """Grid agreement of the three Z routes plus the z^0 = z^d = 1 boundary."""
    watch = Stopwatch()
    subject = f"z-three-route-agreement m<={m_max} d<={d_max}"
    checked = 0
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            failure = compare_routes_at(m, d)
            if failure is not None:
                return watch.done(subject, "identity", failure)
            checked += d + 1
    return watch.done(subject, "identity", None, {"checked": checked})


def compare_routes_at(m: int, d: int) -> dict | None:
    """One (m,d) cell of the three-route check; None means agreement."""
    z = z_from_kl(m, d)
    if z.coeff(0) != 1 or z.coeff(d) != 1:
        return {"m": m, "d": d, "reason": "boundary z^0 = z^d = 1 violated",
                "z0": str(z.coeff(0)), "zd": str(z.coeff(d))}
    for i in range(d + 1):
        ref = z.coeff(i)
        if ref.denominator != 1 or ref <= 0:
            return {"m": m, "d": d, "i": i, "reason": "not a positive integer",
                    "value": str(ref)}
        alt = Fraction(1) if i == d else z_alternating(m, d, i)
        pos = z_positive(m, d, i)
        if alt != ref or pos != ref:
            return {"m": m, "d": d, "i": i, "from_kl": str(ref),
                    "alternating": str(alt), "positive": str(pos)}
    return None


def z_diagonal_symbolic(m: int) -> bool:
    """Check z(m,d,d) = 1 as an exact polynomial identity in d.

    At i = d the prefactor of the positive form is identically 1, so the
    claim reduces to sum_h ((d(h-m+1)+m)/((h+1)m)) * binom(d-1+h, h) = 1
    as a polynomial in d; this reproduces the telescoping computation.
    """
    from .polyring import ONE, X, expand_binomial_affine
    total = Poly()
    for h in range(m):
        # binom(d-1+h, h) expanded as a polynomial in d.
        b = expand_binomial_affine(X + (h - 1), h) if h else ONE
        linear = X * Fraction(h - m + 1, (h + 1) * m) + Fraction(m, (h + 1) * m)
        total = total + linear * b
    return total == 1


# -- Narayana specialization ---------------------------------------------------


def narayana_ratio(d: int, i: int) -> int:
    """Narayana number binom(d+1, i+1) binom(d+1, i) / (d+1)."""
    val = Fraction(binomial(d + 1, i + 1) * binomial(d + 1, i), d + 1)
    return as_integer(val)


def dyck_peak_counts(n: int) -> list[int]:
    """Counts of Dyck paths of semilength n by number of peaks.

    Explicit enumeration of all paths; entry k-1 counts paths with k peaks.
    Brute force, so only sensible at desk scale (n <= 13 or so).
    """
    counts = [0] * n

    def walk(ups_left: int, downs_left: int, height: int, last_up: bool, peaks: int):
        if ups_left == 0 and downs_left == 0:
            counts[peaks - 1] += 1
            return
        if ups_left:
            walk(ups_left - 1, downs_left, height + 1, True, peaks)
        if downs_left and height > 0:
            walk(ups_left, downs_left - 1, height - 1, False, peaks + (1 if last_up else 0))

    if n > 0:
        walk(n, n, 0, False, 0)
    return counts


def narayana_check(d_max: int, enumeration_cap: int = 12) -> Certificate:
    """Certify Z_{U_{1,d}} against two independent Narayana oracles.

    The closed ratio covers every d <= d_max; explicit Dyck-path peak
    enumeration additionally covers d <= enumeration_cap.
    """
    watch = Stopwatch()
    subject = f"narayana z(1,d) d<={d_max}"
    for d in range(1, d_max + 1):
        z = z_from_kl(1, d)
        for i in range(d + 1):
            want = narayana_ratio(d, i)
            if z.coeff(i) != want:
                return watch.done(subject, "identity", {
                    "d": d, "i": i, "z": str(z.coeff(i)), "narayana_ratio": want})
        if d <= enumeration_cap:
            # Z_{U_{1,d}} coefficient i is the count of Dyck paths of
            # semilength d+1 with i+1 peaks.
            counts = dyck_peak_counts(d + 1)
            for i in range(d + 1):
                if z.coeff(i) != counts[i]:
                    return watch.done(subject, "identity", {
                        "d": d, "i": i, "z": str(z.coeff(i)),
                        "dyck_peak_count": counts[i]})
    return watch.done(subject, "identity", None, {"d_max": d_max,
                                                  "enumerated_up_to": min(d_max, enumeration_cap)})
