"""Kazhdan-Lusztig coefficients of uniform matroids by four independent routes.

Writing P_{U_{m,d}}(t) = sum_i c(m,d,i) t^i with deg < d/2, the four routes
are the defining recursion on the coefficients, the hook-length closed form,
an alternating closed form, and a manifestly positive closed form.  All
routes compute in exact rationals and must agree on the nose; a shared
table cross-checks every value against whatever another route produced.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arith import as_integer, binomial, inv_factorial, multinomial
from .certificate import Certificate, Stopwatch
from .polyring import IntegrityError, Poly

ROUTES = ("recursive", "hook", "alternating", "positive")


def max_index(d: int) -> int:
    """Largest coefficient index of P_{U_{m,d}}: floor((d-1)/2)."""
    return (d - 1) // 2


def _check_range(m: int, d: int, i: int) -> None:
    if m < 1 or d < 1:
        raise ValueError(f"uniform matroid indices must be positive, got m={m}, d={d}")
    if not 0 <= i <= max_index(d):
        raise ValueError(f"coefficient index i={i} out of range [0, {max_index(d)}] for d={d}")


@lru_cache(maxsize=None)
def c_recursive(m: int, d: int, i: int) -> int:
    """Defining recursion for c(m,d,i), memoized over the (k, j) triangle."""
    _check_range(m, d, i)
    total = (-1) ** i * binomial(m + d, i)
    for j in range(i):
        for k in range(2 * j + 1, i + j + 1):
            total += ((-1) ** (i + j + k)
                      * multinomial(m + d, (m + k, i + j - k, d - i - j))
                      * c_recursive(m, k, j))
    return total


def c_hook_form(m: int, d: int, i: int, extended_bound: bool = False) -> Fraction:
    """Hook-length closed form, summing over h = 1..min(m, d-2i).

    With extended_bound the sum runs to h = m instead; the tail terms
    cancel pairwise under h <-> s-h, so both bounds give equal values.
    Only defined for i >= 1 (the formula contains (i-1)!).
    """
    _check_range(m, d, i)
    if i < 1:
        raise ValueError("hook-form route requires i >= 1; use another route for i = 0")
    top = m if extended_bound else min(m, d - 2 * i)
    total = Fraction(0)
    for h in range(1, top + 1):
        e = m + d - i - h
        total += Fraction(
            (e - i - h + 1) * factorial(m + d),
            e * (e + 1) * (i + h) * (i + h - 1)
            * factorial(e - i) * factorial(h - 1) * factorial(i) * factorial(i - 1),
        )
    return total


def c_alternating(m: int, d: int, i: int) -> Fraction:
    """Alternating closed form for c(m,d,i)."""
    _check_range(m, d, i)
    total = Fraction(0)
    for h in range(1, m + 1):
        total += (Fraction((-1) ** (h + 1) * h, d - h - i + m)
                  * binomial(d - h - i + m, d - 2 * i - h)
                  * binomial(m + i, m - h))
    return binomial(d + m, i) * total


def c_positive(m: int, d: int, i: int) -> Fraction:
    """Manifestly positive closed form for c(m,d,i)."""
    _check_range(m, d, i)
    total = 0
    for h in range(m):
        # binom(i-1+h, h) is 1 at h = 0 even when i = 0 (empty product).
        b = 1 if h == 0 else binomial(i - 1 + h, h)
        total += binomial(d - i + h, h + i + 1) * b
    return Fraction(binomial(d + m, i) * total, d - i)


_DISPATCH = {
    "recursive": lambda m, d, i: Fraction(c_recursive(m, d, i)),
    "hook": lambda m, d, i: c_hook_form(m, d, i) if i >= 1 else c_positive(m, d, i),
    "alternating": c_alternating,
    "positive": c_positive,
}


class KLTable:
    """Shared coefficient cache with provenance and cross-route integrity.

    Any route recording a value that disagrees with what a (possibly
    different) route already stored raises IntegrityError.
    """

    def __init__(self):
        self._entries: dict[tuple[int, int, int], tuple[int, str]] = {}
        self._lock = threading.Lock()

    def record(self, m: int, d: int, i: int, value: int, route: str) -> int:
        if value < 0:
            raise IntegrityError(f"negative KL coefficient c({m},{d},{i}) = {value} via {route}")
        with self._lock:
            prior = self._entries.get((m, d, i))
            if prior is not None and prior[0] != value:
                raise IntegrityError(
                    f"route disagreement at c({m},{d},{i}): "
                    f"{prior[1]} gave {prior[0]}, {route} gave {value}")
            if prior is None:
                self._entries[(m, d, i)] = (value, route)
        return value

    def get(self, m: int, d: int, i: int) -> tuple[int, str] | None:
        return self._entries.get((m, d, i))

    def __len__(self) -> int:
        return len(self._entries)


TABLE = KLTable()


def kl_coefficient(m: int, d: int, i: int, route: str = "positive") -> int:
    """c(m,d,i) by the requested route, integrality-checked and cached."""
    if route not in _DISPATCH:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
    value = as_integer(_DISPATCH[route](m, d, i))
    return TABLE.record(m, d, i, value, route)


def kl_poly(m: int, d: int, route: str = "positive") -> Poly:
    """P_{U_{m,d}}(t) assembled from the requested coefficient route."""
    return Poly(tuple(Fraction(kl_coefficient(m, d, i, route))
                      for i in range(max_index(d) + 1)))


# -- proof-internal identities ------------------------------------------------


def p_sum(m: int, d: int, i: int) -> Fraction:
    """The alternating h-sum p_m from the recursion-consistency proof."""
    total = Fraction(0)
    for h in range(1, m + 1):
        a = d - h - i + m - 1
        if a < 0:
            continue
        total += ((-1) ** (i + h + 1) * h * factorial(a)
                  * inv_factorial(h + i) * inv_factorial(m - h) * inv_factorial(d - 2 * i - h))
    return total


def q_sum(m: int, d: int, i: int) -> Fraction:
    """The alternating j-sum q_m paired with p_m; p_m - q_m = 1."""
    total = Fraction(0)
    for j in range(i + 1):
        total += ((-1) ** (j + 1) * (i - j) * factorial(m + d - i)
                  * Fraction(1, (i + m) * (j + m))
                  * inv_factorial(j) * inv_factorial(d - i - j) * inv_factorial(m - 1))
    return total


def f_normalized_alternating(m: int, d: int, i: int) -> Fraction:
    """c(m,d,i)/binom(d+m,i) computed from the alternating form."""
    total = Fraction(0)
    for h in range(1, m + 1):
        total += (Fraction((-1) ** (h + 1) * h, d - h - i + m)
                  * binomial(d - h - i + m, d - 2 * i - h)
                  * binomial(m + i, m - h))
    return total


def f_normalized_hook(m: int, d: int, i: int) -> Fraction:
    """c(m,d,i)/binom(d+m,i) computed from the extended hook form (i >= 1)."""
    total = Fraction(0)
    for h in range(1, m + 1):
        e = m + d - i - h
        total += Fraction(
            (e - i - h + 1) * factorial(m + d - i),
            e * (e + 1) * (i + h) * (i + h - 1)
            * factorial(e - i) * factorial(h - 1) * factorial(i - 1),
        )
    return total


def verify_proof_identities(m_max: int, d_max: int) -> Certificate:
    """Exhaustively check the hypergeometric identities behind the closed forms.

    (a) p_m - q_m = 1 on every in-range (m, d, i);
    (b) the normalized coefficient f = c/binom(d+m,i), in both the
        alternating and the hook form, satisfies the telescoping step
        f_{m+1} - f_m = binom(d-i+m, m+i+1) binom(i-1+m, m) / (d-i);
    (c) the base case f_1 = binom(d-i, i+1) / (d-i).
    """
    watch = Stopwatch()
    subject = f"proof-identities m<={m_max} d<={d_max}"
    checked = 0
    for d in range(1, d_max + 1):
        for i in range(max_index(d) + 1):
            for m in range(1, m_max + 1):
                if p_sum(m, d, i) - q_sum(m, d, i) != 1:
                    return watch.done(subject, "identity", {
                        "identity": "p_m - q_m = 1", "m": m, "d": d, "i": i,
                        "p": str(p_sum(m, d, i)), "q": str(q_sum(m, d, i))})
                checked += 1
            if i < 1:
                continue
            base = Fraction(binomial(d - i, i + 1), d - i)
            for form, fn in (("alternating", f_normalized_alternating),
                             ("hook", f_normalized_hook)):
                if fn(1, d, i) != base:
                    return watch.done(subject, "identity", {
                        "identity": "f_1 base case", "form": form, "d": d, "i": i,
                        "got": str(fn(1, d, i)), "want": str(base)})
                for m in range(1, m_max):
                    step = Fraction(binomial(d - i + m, m + i + 1) * binomial(i - 1 + m, m), d - i)
                    if fn(m + 1, d, i) - fn(m, d, i) != step:
                        return watch.done(subject, "identity", {
                            "identity": "recurrence difference", "form": form,
                            "m": m, "d": d, "i": i,
                            "difference": str(fn(m + 1, d, i) - fn(m, d, i)),
                            "want": str(step)})
                    checked += 1
    return watch.done(subject, "identity", None, {"checked": checked})


def verify_four_routes(m_max: int, d_max: int) -> Certificate:
    """Grid agreement of all four routes, including both hook-form bounds."""
    watch = Stopwatch()
    subject = f"four-route-agreement m<={m_max} d<={d_max}"
    checked = 0
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            for i in range(max_index(d) + 1):
                failure = compare_routes_at(m, d, i)
                if failure is not None:
                    return watch.done(subject, "identity", failure)
                checked += 1
    return watch.done(subject, "identity", None, {"checked": checked})


def compare_routes_at(m: int, d: int, i: int) -> dict | None:
    """One grid cell of the four-route check; None means agreement."""
    values = {
        "recursive": Fraction(c_recursive(m, d, i)),
        "alternating": c_alternating(m, d, i),
        "positive": c_positive(m, d, i),
    }
    if i >= 1:
        values["hook"] = c_hook_form(m, d, i)
        values["hook_extended"] = c_hook_form(m, d, i, extended_bound=True)
    ref = values["recursive"]
    if ref.denominator != 1 or ref < 0:
        return {"m": m, "d": d, "i": i, "reason": "not a nonnegative integer",
                "value": str(ref)}
    for route, val in values.items():
        if val != ref:
            return {"m": m, "d": d, "i": i, "route": route,
                    "value": str(val), "recursive": str(ref)}
    TABLE.record(m, d, i, ref.numerator, "recursive")
    return None
