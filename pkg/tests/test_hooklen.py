"""Hook lengths, irreducible dimensions, and the equivariant dimension sum."""

import pytest

from klm.hooklen import (Partition, SYT_ENUMERATION_CAP, c_equivariant_sum,
                         count_syt, dim_irrep, equivariant_shape,
                         first_row_hooks_piecewise, hook_lengths,
                         verify_equivariant_sum, verify_hook_factorizations)
from klm.klcoeff import c_positive


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((2, 3))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 2)).n == 5


def test_hook_lengths_examples():
    assert hook_lengths(Partition((2, 1))) == [[3, 1], [1]]
    assert hook_lengths(Partition((5,))) == [[5, 4, 3, 2, 1]]
    assert hook_lengths(Partition((3, 2))) == [[4, 3, 1], [2, 1]]


def test_dim_irrep_examples():
    assert dim_irrep(Partition((2, 2))) == 2
    assert dim_irrep(Partition((3, 2))) == 5
    assert dim_irrep(Partition((7,))) == 1


def test_dim_matches_syt_enumeration():
    def partitions(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest

    for n in range(1, SYT_ENUMERATION_CAP + 1):
        for parts in partitions(n, n):
            shape = Partition(parts)
            assert dim_irrep(shape) == count_syt(shape)


def test_equivariant_shape_and_sum():
    assert equivariant_shape(2, 3, 1, 1) == Partition((3, 2))
    assert c_equivariant_sum(2, 3, 1) == 5
    assert c_equivariant_sum(1, 3, 1) == 2
    assert c_equivariant_sum(1, 5, 2) == 5
    assert c_equivariant_sum(1, 5, 2) == c_positive(1, 5, 2)


def test_first_row_piecewise():
    shape = equivariant_shape(2, 3, 1, 1)
    assert first_row_hooks_piecewise(2, 3, 1, 1) == hook_lengths(shape)[0]


def test_hook_factorization_grid():
    cert = verify_hook_factorizations(4, 10)
    assert cert.passed, cert.witness


def test_equivariant_sum_grid():
    cert = verify_equivariant_sum(3, 10)
    assert cert.passed, cert.witness
