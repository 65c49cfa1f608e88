"""Partitions, hook lengths, and the equivariant dimension sum.

The KL coefficient c(m,d,i) equals a sum of symmetric-group irreducible
dimensions over the shapes (d+m-2i-h+1, h+1, 2^{i-1}); the dimensions come
from the hook-length formula, cross-checked at small n against explicit
standard-Young-tableaux enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .arith import binomial
from .certificate import Certificate, Stopwatch
from .klcoeff import c_recursive

SYT_ENUMERATION_CAP = 8


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"partition parts must be positive, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must weakly decrease, got {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def hook_lengths(shape: Partition) -> list[list[int]]:
    """Hook length of every cell: arm + leg + 1, row-major."""
    parts = shape.parts
    cols = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    return [[(parts[r] - c - 1) + (cols[c] - r - 1) + 1 for c in range(parts[r])]
            for r in range(len(parts))]


def dim_irrep(shape: Partition) -> int:
    """Hook-length formula: n! / product of hook lengths."""
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    num = factorial(shape.n)
    if num % prod:
        raise ArithmeticError(f"hook product {prod} does not divide {shape.n}! for {shape}")
    return num // prod


def count_syt(shape: Partition) -> int:
    """Standard Young tableaux of the shape, by explicit backtracking.

    Independent of hook products; capped at n <= 8 as a desk-scale oracle.
    """
    if shape.n > SYT_ENUMERATION_CAP:
        raise ValueError(f"SYT enumeration capped at n <= {SYT_ENUMERATION_CAP}")
    parts = shape.parts
    fill = [0] * len(parts)  # cells already placed per row

    def place(value: int) -> int:
        if value > shape.n:
            return 1
        total = 0
        for r in range(len(parts)):
            c = fill[r]
            if c >= parts[r]:
                continue
            if r > 0 and fill[r - 1] <= c:
                continue
            fill[r] += 1
            total += place(value + 1)
            fill[r] -= 1
        return total

    return place(1)


def equivariant_shape(m: int, d: int, i: int, h: int) -> Partition:
    """The shape (d+m-2i-h+1, h+1, 2^{i-1}) indexing one summand of c(m,d,i)."""
    return Partition((d + m - 2 * i - h + 1, h + 1) + (2,) * (i - 1))


def c_equivariant_sum(m: int, d: int, i: int) -> int:
    """Sum of irreducible dimensions over h = 1..min(m, d-2i)."""
    if m < 1 or d < 1 or i < 1:
        raise ValueError("equivariant sum requires m, d, i >= 1")
    if d - 2 * i < 1:
        raise ValueError(f"equivariant sum requires d - 2i >= 1, got d={d}, i={i}")
    return sum(dim_irrep(equivariant_shape(m, d, i, h))
               for h in range(1, min(m, d - 2 * i) + 1))


def first_row_hooks_piecewise(m: int, d: int, i: int, h: int) -> list[int]:
    """The piecewise closed form for the first-row hook lengths."""
    out = []
    for j in range(1, m + d - 2 * i - h + 2):
        if j <= 2:
            out.append(m + d - i - h + 2 - j)
        elif j <= h + 1:
            out.append(m + d - 2 * i - h + 3 - j)
        else:
            out.append(m + d - 2 * i - h + 2 - j)
    return out


def verify_hook_factorizations(m_max: int, d_max: int) -> Certificate:
    """Check the hook-length bookkeeping behind the equivariant dimension sum.

    For every in-range (m, d, i, h): the piecewise first-row values match
    the generic hook lengths; the three row-product identities hold; and
    the dimension equals the corresponding hook-form summand of c(m,d,i).
    """
    watch = Stopwatch()
    subject = f"hook-factorizations m<={m_max} d<={d_max}"
    checked = 0
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            for i in range(1, (d - 1) // 2 + 1):
                for h in range(1, min(m, d - 2 * i) + 1):
                    failure = check_hook_cell(m, d, i, h)
                    if failure is not None:
                        return watch.done(subject, "identity", failure)
                    checked += 1
    return watch.done(subject, "identity", None, {"checked": checked})


def check_hook_cell(m: int, d: int, i: int, h: int) -> dict | None:
    """One (m,d,i,h) cell of the hook verification; None means all identities hold."""
    shape = equivariant_shape(m, d, i, h)
    hooks = hook_lengths(shape)
    where = {"m": m, "d": d, "i": i, "h": h, "shape": list(shape.parts)}

    piecewise = first_row_hooks_piecewise(m, d, i, h)
    if piecewise != hooks[0]:
        return {**where, "identity": "first-row piecewise values",
                "piecewise": piecewise, "hooks": hooks[0]}

    row1 = 1
    for v in hooks[0]:
        row1 *= v
    want1 = Fraction((m + d - i - h) * (m + d - i - h + 1)
                     * factorial(m + d - 2 * i - h), m + d - 2 * i - 2 * h + 1)
    if row1 != want1:
        return {**where, "identity": "first-row product", "product": row1,
                "closed_form": str(want1)}

    row2 = 1
    for v in hooks[1]:
        row2 *= v
    want2 = (i + h) * (i + h - 1) * factorial(h - 1)
    if row2 != want2:
        return {**where, "identity": "second-row product", "product": row2,
                "closed_form": want2}

    tail = 1
    for row in hooks[2:]:
        for v in row:
            tail *= v
    want_tail = factorial(i) * factorial(i - 1)
    if tail != want_tail:
        return {**where, "identity": "tail product", "product": tail,
                "closed_form": want_tail}

    e = m + d - i - h
    summand = Fraction(
        (e - i - h + 1) * factorial(m + d),
        e * (e + 1) * (i + h) * (i + h - 1)
        * factorial(e - i) * factorial(h - 1) * factorial(i) * factorial(i - 1))
    if dim_irrep(shape) != summand:
        return {**where, "identity": "dimension equals hook-form summand",
                "dimension": dim_irrep(shape), "summand": str(summand)}
    return None


def verify_equivariant_sum(m_max: int, d_max: int) -> Certificate:
    """c(m,d,i) from the dimension sum equals the recursion on the grid."""
    watch = Stopwatch()
    subject = f"equivariant-dimension-sum m<={m_max} d<={d_max}"
    checked = 0
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            for i in range(1, (d - 1) // 2 + 1):
                got = c_equivariant_sum(m, d, i)
                want = c_recursive(m, d, i)
                if got != want:
                    return watch.done(subject, "identity", {
                        "m": m, "d": d, "i": i,
                        "dimension_sum": got, "recursive": want})
                checked += 1
    return watch.done(subject, "identity", None, {"checked": checked})
