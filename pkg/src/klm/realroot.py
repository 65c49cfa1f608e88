"""Exact real-rootedness certification.

Sturm chains give exact distinct-real-root counts over intervals with
extended-rational endpoints; Borchardt-Hermite Hurwitz determinants give
an independent distinct-real-zeros criterion, numerically and symbolically
in the shifted parameter d' = d - 2(m-1); the n-sequence test and
multiplier-sequence spot checks complete the toolbox.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from .arith import binomial
from .certificate import Certificate, Stopwatch
from .polyring import (Poly, X, _primitive, as_poly, det_fraction,
                       det_parametric, poly_gcd, squarefree_part)

NEG_INF = "-inf"
POS_INF = "+inf"


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def sturm_chain(p: Poly) -> list[Poly]:
    """Signed remainder chain of (p, p'), content-stripped at each step."""
    if not p:
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [_primitive(p)]
    if p.degree >= 1:
        chain.append(_primitive(p.derivative()))
        while chain[-1].degree >= 0:
            r = chain[-2].rem(chain[-1])
            if not r:
                break
            chain.append(_primitive(-r))
    return chain


def _sign_at(p: Poly, x) -> int:
    if x == NEG_INF:
        return _sign(p.leading) * (-1) ** (p.degree % 2) if p else 0
    if x == POS_INF:
        return _sign(p.leading) if p else 0
    return _sign(p.eval(Fraction(x)))


def _variations(chain: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _deflate(p: Poly, root: Fraction) -> tuple[Poly, int]:
    """Remove every (x - root) factor; returns (quotient, multiplicity)."""
    mult = 0
    lin = X - root
    while p.degree >= 1 and p.eval(root) == 0:
        p, _ = p.divmod(lin)
        mult += 1
    return p, mult


def sturm_count(p: Poly, a, b) -> int:
    """Distinct real roots of p in (a, b], endpoints rational or +/-inf.

    Rational endpoints that happen to be roots are removed exactly by
    deflation first: a root at a is outside the half-open interval, a
    root at b is inside and re-counted after deflation.
    """
    if not p:
        raise ValueError("root counting on the zero polynomial")
    if p.degree == 0:
        return 0
    extra = 0
    if a != NEG_INF and p.eval(Fraction(a)) == 0:
        p, _ = _deflate(p, Fraction(a))
    if b != POS_INF and p.eval(Fraction(b)) == 0:
        p, _ = _deflate(p, Fraction(b))
        extra = 1
    if p.degree == 0:
        return extra
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b) + extra


def count_real_roots(p: Poly) -> int:
    """Distinct real roots over the whole line."""
    return sturm_count(p, NEG_INF, POS_INF)


def multiplicity_profile(p: Poly) -> list[int]:
    """Number of distinct roots of each multiplicity >= 1, via iterated gcd."""
    out = []
    while p.degree >= 1:
        g = poly_gcd(p, p.derivative())
        out.append(p.degree - g.degree)
        p = g
    # out[k] counts roots of multiplicity > k; convert to exact counts
    return [out[k] - (out[k + 1] if k + 1 < len(out) else 0) for k in range(len(out))]


def all_zeros_real_negative(p: Poly, subject: str | None = None) -> Certificate:
    """Certify that every complex zero of p is real and negative.

    Uses the squarefree part, which carries exactly the distinct zeros;
    multiplicities cannot move a zero off the negative axis.
    """
    watch = Stopwatch()
    subject = subject or "polynomial"
    if not p:
        raise ValueError("zero polynomial has no zero locus to certify")
    if p.eval(Fraction(0)) == 0:
        raise ValueError("p(0) = 0: a zero root fails 'only negative zeros' by definition")
    sf = squarefree_part(p)
    negative = sturm_count(sf, NEG_INF, 0)
    if negative == sf.degree:
        return watch.done(subject, "sturm", None, {
            "distinct_zeros": sf.degree,
            "multiplicities": multiplicity_profile(p)})
    return watch.done(subject, "sturm", {
        "distinct_zeros": sf.degree, "negative_real_zeros": negative,
        "coeffs": [str(c) for c in p.coeffs]})


# -- Hurwitz determinants ------------------------------------------------------


def _descending(p: Poly, n: int) -> list:
    return [p.coeff(n - j) for j in range(n + 1)]


def hurwitz_matrix(a_desc: list, b_desc: list, k: int) -> list[list]:
    """The 2k x 2k interleaved-coefficient matrix of the two lists."""

    def entry(coeffs, idx):
        return coeffs[idx] if 0 <= idx < len(coeffs) else Fraction(0)

    rows = []
    for r in range(k):
        rows.append([entry(a_desc, j - r) if j >= r else Fraction(0) for j in range(2 * k)])
        rows.append([entry(b_desc, j - r) if j >= r else Fraction(0) for j in range(2 * k)])
    return rows


def hurwitz_delta(a: Poly, b: Poly, k: int):
    """Hurwitz determinant Delta_2k(A, B), exact.

    Numeric coefficients give a Fraction; Poly-in-d coefficients give the
    determinant as an exact polynomial in d (evaluation-interpolation).
    """
    if not a:
        raise ValueError("Hurwitz determinants need a nonzero leading coefficient")
    if k < 1:
        raise ValueError(f"Hurwitz index k must be >= 1, got {k}")
    n = a.degree
    rows = hurwitz_matrix(_descending(a, n), _descending(b, n), k)
    if any(isinstance(c, Poly) for c in a.coeffs) or any(isinstance(c, Poly) for c in b.coeffs):
        bound = sum(max((as_poly(e).degree for e in row), default=0) for row in rows)
        return det_parametric(rows, max(bound, 0))
    return det_fraction([[Fraction(e) for e in row] for row in rows])


def distinct_real_certificate(a: Poly, subject: str | None = None) -> Certificate:
    """Certify that deg(A) distinct real zeros exist: all Delta_2k > 0.

    Cross-validated against the Sturm distinct-real-root count.
    """
    watch = Stopwatch()
    subject = subject or "polynomial"
    n = a.degree
    if n < 1:
        raise ValueError("criterion applies to polynomials of degree >= 1")
    b = a.derivative()
    deltas = [hurwitz_delta(a, b, k) for k in range(1, n + 1)]
    hurwitz_ok = all(v > 0 for v in deltas)
    sturm_ok = count_real_roots(squarefree_part(a)) == n and squarefree_part(a).degree == n
    if hurwitz_ok != sturm_ok:
        raise RuntimeError(
            f"Hurwitz and Sturm disagree on {subject}: {hurwitz_ok} vs {sturm_ok}")
    if hurwitz_ok:
        return watch.done(subject, "hurwitz", None,
                          {"deltas": [str(v) for v in deltas]})
    return watch.done(subject, "hurwitz", {
        "deltas": [str(v) for v in deltas],
        "sturm_distinct_real": count_real_roots(squarefree_part(a))})


def hurwitz_positivity_symbolic(family: str, m: int) -> Certificate:
    """Symbolic reproduction of the Hurwitz positivity argument for G or Y.

    For d >= 2(m-1), every Delta_2k(.,.') with 1 <= k <= 2(m-1), written in
    d' = d - 2(m-1), must have strictly positive coefficients; the finitely
    many small cases d < 2(m-1) are settled by direct Sturm tests.
    """
    from .seqfactor import SeqSpec, gy_poly
    watch = Stopwatch()
    if m < 2:
        raise ValueError("the Hurwitz argument starts at m = 2")
    if family not in ("G", "Y", "f", "b"):
        raise ValueError(f"family must be G/f or Y/b, got {family!r}")
    name = "G" if family in ("f", "G") else "Y"
    spec = SeqSpec("f" if name == "G" else "b", m)
    subject = f"hurwitz-{name} m={m}"

    sym = gy_poly(spec)  # polynomial in t, coefficients Poly-in-d
    dsym = sym.derivative()
    shift = X + 2 * (m - 1)  # d = d' + 2(m-1)
    expansions = []
    for k in range(1, 2 * (m - 1) + 1):
        delta = hurwitz_delta(sym, dsym, k)
        shifted = delta.compose(shift)
        for idx, c in enumerate(shifted.coeffs):
            if not c > 0:
                return watch.done(subject, "hurwitz", {
                    "k": k, "coefficient_index": idx, "value": str(c),
                    "delta_in_dprime": [str(x) for x in shifted.coeffs]})
        expansions.append([str(c) for c in shifted.coeffs])

    small_cases = []
    for d in range(1, 2 * (m - 1)):
        g = gy_poly(spec, d)
        if g.degree < 1:
            small_cases.append({"d": d, "degree": g.degree, "real_rooted": True})
            continue
        sf = squarefree_part(g)
        ok = count_real_roots(sf) == sf.degree
        small_cases.append({"d": d, "degree": g.degree, "real_rooted": ok})
        if not ok:
            return watch.done(subject, "hurwitz", {
                "small_case_d": d, "coeffs": [str(c) for c in g.coeffs]})
    return watch.done(subject, "hurwitz", None, {
        "delta_coeffs_in_dprime": expansions, "small_cases": small_cases})


# -- n-sequence and multiplier-sequence tests -----------------------------------


def n_sequence_test(gamma: list[Fraction], d: int, subject: str | None = None) -> Certificate:
    """Test whether Gamma is a d-sequence via Gamma[(1+t)^d].

    Passes iff all zeros of sum_i Gamma_i binom(d,i) t^i are real and of
    one sign.  A zero root fails and is reported distinctly, since the
    same-sign criterion does not address it.
    """
    watch = Stopwatch()
    subject = subject or "sequence"
    if len(gamma) != d + 1:
        raise ValueError(f"expected {d + 1} sequence entries, got {len(gamma)}")
    p = Poly(tuple(Fraction(g) * binomial(d, i) for i, g in enumerate(gamma)))
    if not p:
        return watch.done(subject, "nseq", {"reason": "transform is identically zero"})
    if p.degree == 0:
        return watch.done(subject, "nseq", None, {"degree": 0})
    if p.eval(Fraction(0)) == 0:
        return watch.done(subject, "nseq", {
            "reason": "zero root", "coeffs": [str(c) for c in p.coeffs]})
    sf = squarefree_part(p)
    neg = sturm_count(sf, NEG_INF, 0)
    pos = sturm_count(sf, 0, POS_INF)
    if neg == sf.degree or pos == sf.degree:
        return watch.done(subject, "nseq", None, {
            "degree": p.degree, "distinct_zeros": sf.degree,
            "sign": "negative" if neg == sf.degree else "positive"})
    return watch.done(subject, "nseq", {
        "degree": p.degree, "negative": neg, "positive": pos,
        "distinct": sf.degree, "coeffs": [str(c) for c in p.coeffs]})


def random_real_rooted(rng: random.Random, max_degree: int = 6) -> Poly:
    """Product of linear factors with small random rational roots."""
    deg = rng.randint(1, max_degree)
    p = Poly((Fraction(1),))
    for _ in range(deg):
        root = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if root == 0:
            root = Fraction(1)
        p = p * (X - root)
    return p


def multiplier_spot_check(m: int, d: int, trials: int, seed: int = 0) -> Certificate:
    """Spot-check that {binom(d+2m, i+m)}_i preserves real-rootedness.

    Random real-rooted inputs only; instances, not a proof.
    """
    watch = Stopwatch()
    subject = f"multiplier binom({d + 2 * m}, i+{m}) trials={trials}"
    if trials < 1:
        raise ValueError("at least one trial required")
    rng = random.Random(seed)
    for trial in range(trials):
        p = random_real_rooted(rng)
        image = Poly(tuple(c * binomial(d + 2 * m, i + m)
                           for i, c in enumerate(p.coeffs)))
        if image.degree < 1:
            continue
        sf = squarefree_part(image)
        if count_real_roots(sf) != sf.degree:
            return watch.done(subject, "multiplier", {
                "trial": trial,
                "input": [str(c) for c in p.coeffs],
                "image": [str(c) for c in image.coeffs]})
    return watch.done(subject, "multiplier", None, {"trials": trials})
