"""Four independent routes to the KL coefficients and the proof identities."""

from fractions import Fraction

import pytest

from klm.arith import binomial
from klm.klcoeff import (c_alternating, c_hook_form, c_positive, c_recursive,
                         kl_coefficient, kl_poly, max_index, p_sum, q_sum,
                         verify_four_routes, verify_proof_identities)
from klm.polyring import Poly


def test_c_recursive_examples():
    assert c_recursive(1, 1, 0) == 1
    for m in range(1, 11):
        for d in range(1, 11):
            assert c_recursive(m, d, 0) == 1
    assert c_recursive(1, 3, 1) == 2


def test_c_recursive_range_check():
    with pytest.raises(ValueError):
        c_recursive(1, 3, 2)
    with pytest.raises(ValueError):
        c_recursive(0, 3, 0)


def test_c_hook_form_examples():
    assert c_hook_form(2, 3, 1) == 5
    assert c_hook_form(1, 3, 1) == 2
    assert c_hook_form(4, 4, 1) == c_hook_form(4, 4, 1, extended_bound=True)
    with pytest.raises(ValueError):
        c_hook_form(2, 3, 0)


def test_c_alternating_examples():
    assert c_alternating(1, 1, 0) == 1
    assert c_alternating(2, 3, 1) == 5
    assert c_alternating(3, 7, 2) == c_recursive(3, 7, 2)


def test_c_positive_examples():
    assert c_positive(1, 5, 2) == 5
    assert c_positive(2, 3, 1) == 5
    for m in range(1, 8):
        for d in range(1, 8):
            assert c_positive(m, d, 0) == 1


def test_kl_poly_examples():
    assert kl_poly(1, 3) == Poly((Fraction(1), Fraction(2)))
    assert kl_poly(2, 3) == Poly((Fraction(1), Fraction(5)))
    assert kl_poly(1, 5) == Poly((Fraction(1), Fraction(9), Fraction(5)))


def test_kl_poly_degree_and_constant_term():
    for m in range(1, 6):
        for d in range(1, 12):
            p = kl_poly(m, d)
            assert p.degree <= max_index(d)
            assert p.coeff(0) == 1
            assert all(c > 0 and c.denominator == 1 for c in p.coeffs)


def test_extended_bound_invariance_grid():
    for m in range(1, 6):
        for d in range(1, 14):
            for i in range(1, max_index(d) + 1):
                assert c_hook_form(m, d, i) == c_hook_form(m, d, i, extended_bound=True)


def test_route_dispatch():
    for route in ("recursive", "hook", "alternating", "positive"):
        assert kl_coefficient(2, 5, 1, route) == 28
    with pytest.raises(ValueError):
        kl_coefficient(2, 5, 1, "guess")


def test_four_route_agreement_small_grid():
    cert = verify_four_routes(4, 12)
    assert cert.passed, cert.witness


def test_proof_identity_examples():
    assert p_sum(1, 5, 2) - q_sum(1, 5, 2) == 1
    # m=1 base case at (d=7, i=3): both normalized forms give binom(4,4)/4.
    from klm.klcoeff import f_normalized_alternating, f_normalized_hook
    base = Fraction(binomial(4, 4), 4)
    assert f_normalized_alternating(1, 7, 3) == base
    assert f_normalized_hook(1, 7, 3) == base


def test_proof_identities_grid():
    cert = verify_proof_identities(3, 9)
    assert cert.passed, cert.witness
