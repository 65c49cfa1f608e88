"""Lattice-of-flats oracle: characteristic, KL, and Z polynomials from axioms."""

from fractions import Fraction

from klm.klcoeff import kl_poly
from klm.oracle import (ExplicitLattice, RankedLattice, char_poly, kl_defining,
                        restriction_contraction_audit, verify_oracle_agreement,
                        z_defining)
from klm.polyring import Poly
from klm.zcoeff import z_from_kl


def P(*coeffs) -> Poly:
    return Poly(tuple(Fraction(c) for c in coeffs))


def test_char_poly_examples():
    assert char_poly(RankedLattice(1, 2)) == P(2, -3, 1)
    for k in range(6):
        assert char_poly(RankedLattice(0, k)) == P(-1, 1) ** k
    for m in range(4):
        for d in range(1, 6):
            assert char_poly(RankedLattice(m, d)).eval(Fraction(1)) == 0


def test_kl_defining_examples():
    p, consistent = kl_defining(1, 2)
    assert p == P(1) and consistent
    assert kl_defining(2, 3)[0] == P(1, 5)
    for m in range(1, 11):
        p, consistent = kl_defining(m, 1)
        assert p == P(1) and consistent


def test_z_defining_examples():
    assert z_defining(1, 2) == P(1, 3, 1)
    assert z_defining(2, 3) == P(1, 10, 10, 1)
    assert z_defining(3, 1) == P(1, 1)


def test_explicit_lattice_structure():
    lat = ExplicitLattice(3, 2)  # U_{1,2}
    proper = [f for f in lat.flats if len(f) < 3]
    assert sorted(map(sorted, proper)) == [[], [0], [1], [2]]
    free = ExplicitLattice(3, 3)  # U_{0,3}
    assert len(free.flats) == 8


def test_explicit_char_matches_fast_path():
    for n in range(1, 9):
        for d in range(1, n + 1):
            assert ExplicitLattice(n, d).char_poly() == char_poly(RankedLattice(n - d, d))


def test_oracle_matches_closed_forms():
    for m in range(1, 5):
        for d in range(1, 9):
            p, consistent = kl_defining(m, d)
            assert consistent
            assert p == kl_poly(m, d)
            assert z_defining(m, d) == z_from_kl(m, d)


def test_audit_certificate():
    cert = restriction_contraction_audit(8)
    assert cert.passed, cert.witness


def test_agreement_certificate():
    cert = verify_oracle_agreement(16)
    assert cert.passed, cert.witness
