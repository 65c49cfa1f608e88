"""Exact integer and rational kernels shared by every other module.

All quantities in this package are computed over arbitrary-precision
integers (Python ``int``) and normalized rationals (``fractions.Fraction``);
no floating point enters any computation path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence


def binomial(n: int, k: int) -> int:
    """Binomial coefficient n choose k.

    Out-of-range k (k < 0 or k > n) returns 0, matching the summation
    convention the closed-form coefficient formulas rely on.  Negative n
    is a usage error; generalized binomials in a parameter live in
    :mod:`klm.polyring`.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient n! / prod(parts!), parts summing to n."""
    if n < 0:
        raise ValueError(f"multinomial requires n >= 0, got n={n}")
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative, got {parts}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {parts} do not sum to n={n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def falling_factorial(x, k: int):
    """Falling factorial (x)_k = x (x-1) ... (x-k+1); empty product is 1.

    x may be an int, a Fraction, or any ring element supporting - and *
    (e.g. a Poly in a parameter).
    """
    if k < 0:
        raise ValueError(f"falling_factorial requires k >= 0, got k={k}")
    out = 1
    for j in range(k):
        out = out * (x - j)
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k).

    Satisfies the basis change x^n = sum_k S(n, k) (x)_k.
    """
    if n < 0 or k < 0:
        raise ValueError(f"stirling2 requires nonnegative arguments, got ({n}, {k})")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def inv_factorial(n: int) -> Fraction:
    """1/n! with the convention 1/(negative)! = 0.

    The paper's hypergeometric sums silently drop terms whose factorial
    arguments go negative; this helper makes that convention explicit.
    """
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def as_integer(x) -> int:
    """Coerce an integer-valued rational to int, raising if it is not one."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"expected an integer value, got {x}")
        return x.numerator
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
