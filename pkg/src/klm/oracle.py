"""Formula-free ground truth from the lattice of flats.

Characteristic polynomials come from the recursive Mobius definition,
never from a closed form; KL polynomials are read off the defining
identity t^d P(1/t) = sum_F chi_{M_F}(t) P_{M^F}(t); Z-polynomials come
from their defining sum.  A brute-force closure audit validates, at tiny
scale, the structural facts the rank-grouped fast path relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .arith import binomial
from .certificate import Certificate, Stopwatch
from .polyring import Poly


@dataclass(frozen=True)
class RankedLattice:
    """Rank-grouped lattice of flats of a uniform matroid U_{m,d}.

    Proper flats of rank k are the binom(m+d, k) subsets of size k < d;
    the unique top flat is the whole ground set at rank d.  m = 0 gives
    the Boolean lattice of the free matroid.
    """

    m: int
    d: int

    def __post_init__(self):
        if self.m < 0 or self.d < 0:
            raise ValueError(f"invalid uniform matroid U_{{{self.m},{self.d}}}")

    @property
    def rank(self) -> int:
        return self.d

    @property
    def ground(self) -> int:
        return self.m + self.d

    def flat_count(self, k: int) -> int:
        if k == self.d:
            return 1
        if 0 <= k < self.d:
            return binomial(self.ground, k)
        return 0


@lru_cache(maxsize=None)
def _mobius_by_rank(m: int, d: int) -> tuple[tuple[int, ...], int]:
    """Mobius values mu(bottom, F) per proper rank, plus the top value.

    Computed by the recursive definition mu(0,F) = -sum_{G < F} mu(0,G);
    the interval below a proper rank-k flat is Boolean, so a rank-k flat
    has binom(k, j) flats of rank j below it.
    """
    proper = [0] * d
    for k in range(d):
        if k == 0:
            proper[0] = 1
        else:
            proper[k] = -sum(binomial(k, j) * proper[j] for j in range(k))
    top = -sum(binomial(m + d, k) * proper[k] for k in range(d))
    if d == 0:
        top = 1
    return tuple(proper), top


def char_poly(lattice: RankedLattice) -> Poly:
    """chi(t) = sum_F mu(bottom, F) t^{rank - rank F}, grouped by rank."""
    m, d = lattice.m, lattice.d
    proper, top = _mobius_by_rank(m, d)
    coeffs = [Fraction(0)] * (d + 1)
    for k in range(d):
        coeffs[d - k] += binomial(m + d, k) * proper[k]
    coeffs[0] += top
    return Poly(coeffs)


@lru_cache(maxsize=None)
def kl_defining(m: int, d: int) -> tuple[Poly, bool]:
    """P_{U_{m,d}}(t) from the defining identity, with a consistency flag.

    R(t) = sum over nonempty flats of chi_{M_F}(t) P_{M^F}(t) equals
    t^d P(1/t) - P(t).  The high half of R determines P (deg P < d/2);
    the flag reports whether the low half then equals -P and the middle
    coefficient (even d) vanishes, which the identity forces.
    """
    if m < 1 or d < 1:
        raise ValueError(f"kl_defining requires m, d >= 1, got m={m}, d={d}")
    r = Poly()
    for k in range(1, d):
        # Localization at a rank-k flat is the free matroid on k elements;
        # contraction is U_{m, d-k}.  binom(m+d, k) flats share each rank.
        chi = char_poly(RankedLattice(0, k))
        p_contr = kl_defining(m, d - k)[0] if d - k >= 1 else Poly((Fraction(1),))
        r = r + binomial(m + d, k) * (chi * p_contr)
    r = r + char_poly(RankedLattice(m, d))

    half = (d - 1) // 2
    coeffs = tuple(r.coeff(d - j) for j in range(half + 1))
    p = Poly(coeffs)
    consistent = all(r.coeff(j) == -coeffs[j] for j in range(half + 1))
    if d % 2 == 0 and r.coeff(d // 2) != 0:
        consistent = False
    return p, consistent


@lru_cache(maxsize=None)
def z_defining(m: int, d: int) -> Poly:
    """Z_{U_{m,d}}(t) = sum_F t^{rk M_F} P_{M^F}(t), grouped by flat rank."""
    if m < 1 or d < 1:
        raise ValueError(f"z_defining requires m, d >= 1, got m={m}, d={d}")
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    for k in range(d):
        p_contr = kl_defining(m, d - k)[0]
        mult = binomial(m + d, k)
        for j, c in enumerate(p_contr.coeffs):
            coeffs[k + j] += mult * c
    return Poly(coeffs)


# -- explicit-closure audit ----------------------------------------------------


class ExplicitLattice:
    """Lattice of flats built from the raw rank function by subset closure."""

    def __init__(self, n: int, d: int):
        if n > 20:
            raise ValueError("explicit closure is a tiny-scale audit path")
        self.n = n
        self.d = d
        self.flats: list[frozenset[int]] = []
        universe = frozenset(range(n))
        for size in range(n + 1):
            for combo in combinations(range(n), size):
                s = frozenset(combo)
                if self._closure(s, universe) == s:
                    self.flats.append(s)

    def rank_fn(self, s: frozenset[int]) -> int:
        return min(len(s), self.d)

    def _closure(self, s: frozenset[int], universe: frozenset[int]) -> frozenset[int]:
        rk = self.rank_fn(s)
        return frozenset(x for x in universe if self.rank_fn(s | {x}) == rk)

    def counts_by_rank(self) -> list[int]:
        out = [0] * (self.d + 1)
        for f in self.flats:
            out[self.rank_fn(f)] += 1
        return out

    def char_poly(self) -> Poly:
        """chi from the honest Mobius recursion over the explicit flat poset."""
        order = sorted(self.flats, key=len)
        mu: dict[frozenset[int], int] = {}
        for f in order:
            below = [g for g in order if g < f]
            mu[f] = 1 if not below else -sum(mu[g] for g in below)
        coeffs = [Fraction(0)] * (self.d + 1)
        for f in self.flats:
            coeffs[self.d - self.rank_fn(f)] += mu[f]
        return Poly(coeffs)


def restriction_contraction_audit(n_max: int) -> Certificate:
    """Exhaustively validate the structural facts behind the fast path.

    For every uniform matroid with m + d <= n_max: proper flats are exactly
    the subsets of size < d; every proper flat's lower interval is Boolean;
    and the upper interval of a rank-k flat matches the rank-grouped flat
    counts of U_{m, d-k}.
    """
    if n_max > 12:
        raise ValueError("audit is exhaustive over subsets; n_max capped at 12")
    watch = Stopwatch()
    subject = f"restriction-contraction-audit m+d<={n_max}"
    checked = 0
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            m = n - d
            lat = ExplicitLattice(n, d)
            failure = _audit_one(lat, m, d)
            if failure is not None:
                return watch.done(subject, "identity", failure)
            checked += 1
    return watch.done(subject, "identity", None, {"matroids": checked})


def _audit_one(lat: ExplicitLattice, m: int, d: int) -> dict | None:
    n = m + d
    universe = frozenset(range(n))
    expected = {frozenset(c) for size in range(d) for c in combinations(range(n), size)}
    expected.add(universe)
    if set(lat.flats) != expected:
        return {"m": m, "d": d, "reason": "flat set mismatch",
                "extra": sorted(map(sorted, set(lat.flats) - expected)),
                "missing": sorted(map(sorted, expected - set(lat.flats)))}
    for f in lat.flats:
        k = lat.rank_fn(f)
        if f == universe:
            continue
        # Restriction to f: flats of the matroid restricted to f are the
        # flats contained in f; Boolean means all 2^k subsets appear.
        inside = [g for g in lat.flats if g <= f]
        if len(inside) != 2 ** k:
            return {"m": m, "d": d, "flat": sorted(f),
                    "reason": "restriction lattice not Boolean",
                    "flats_inside": len(inside)}
        # Contraction by f: upper interval, ranks shifted down by k,
        # compared against the rank-grouped counts of U_{m, d-k}.
        above = [g for g in lat.flats if g >= f]
        counts = [0] * (d - k + 1)
        for g in above:
            counts[lat.rank_fn(g) - k] += 1
        want = [RankedLattice(m, d - k).flat_count(j) for j in range(d - k + 1)]
        if counts != want:
            return {"m": m, "d": d, "flat": sorted(f),
                    "reason": "contraction lattice mismatch",
                    "counts": counts, "expected": want}
    return None


def verify_oracle_agreement(total_max: int) -> Certificate:
    """kl_defining and z_defining match the closed-form routes for m+d <= total_max."""
    from .klcoeff import kl_poly
    from .zcoeff import z_from_kl
    watch = Stopwatch()
    subject = f"oracle-agreement m+d<={total_max}"
    checked = 0
    for m in range(1, total_max):
        for d in range(1, total_max - m + 1):
            p, consistent = kl_defining(m, d)
            if not consistent:
                return watch.done(subject, "identity", {
                    "m": m, "d": d, "reason": "defining identity inconsistent"})
            if p != kl_poly(m, d):
                return watch.done(subject, "identity", {
                    "m": m, "d": d, "reason": "KL mismatch",
                    "oracle": [str(c) for c in p.coeffs],
                    "closed_form": [str(c) for c in kl_poly(m, d).coeffs]})
            if z_defining(m, d) != z_from_kl(m, d):
                return watch.done(subject, "identity", {
                    "m": m, "d": d, "reason": "Z mismatch"})
            checked += 1
    return watch.done(subject, "identity", None, {"pairs": checked})
