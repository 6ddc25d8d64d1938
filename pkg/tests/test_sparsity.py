"""Numerator sparsity bounds for many generators."""

import pytest

from numsemi import (
    diagonal_sum_check,
    min_element_check,
    random_valid_tuples,
    sparsity_check,
    validate_generators,
)
from numsemi.errors import DimensionUnsupported


def test_sparsity_goldens_m4():
    rep = sparsity_check(validate_generators((4, 21, 26, 43)))
    assert (rep.m, rep.d1, rep.diag) == (4, 4, (13, 2, 2, 2))
    assert rep.count == 18
    assert rep.bound == 26 and rep.weak_bound == 26
    assert rep.holds

    rep2 = sparsity_check(validate_generators((4, 31, 37, 50)))
    assert rep2.count == 18 and rep2.holds

    rep3 = sparsity_check(validate_generators((4, 13, 15, 18)))
    assert rep3.count == 18 and rep3.holds


def test_sparsity_m3_exact_counts():
    non = sparsity_check(validate_generators((3, 4, 5)))
    assert (non.count, non.bound, non.holds) == (6, 6, True)
    sym = sparsity_check(validate_generators((4, 5, 6)))
    assert (sym.count, sym.bound, sym.holds) == (4, 4, True)
    tri = sparsity_check(validate_generators((6, 10, 15)))
    assert (tri.count, tri.bound, tri.holds) == (4, 4, True)


def test_dimension_guards():
    with pytest.raises(DimensionUnsupported):
        sparsity_check(validate_generators((3, 5)))
    with pytest.raises(DimensionUnsupported):
        diagonal_sum_check(validate_generators((3, 4, 5)))


def test_min_element_check():
    assert min_element_check(validate_generators((4, 21, 26, 43)))  # d1 = m
    assert min_element_check(validate_generators((3, 4, 5)))


def test_five_generators():
    g = validate_generators((5, 6, 7, 8, 9))
    rep = sparsity_check(g)
    assert rep.m == 5
    assert rep.holds
    assert diagonal_sum_check(g)
    assert min_element_check(g)


def test_random_valid_tuples_deterministic():
    sample = random_valid_tuples(5, 4, 100, seed=20260815)
    assert [g.elements for g in sample] == [
        (12, 66, 91, 98),
        (9, 73, 89, 97),
        (43, 52, 62, 92),
        (6, 65, 76, 87),
        (61, 68, 79, 93),
    ]
    again = random_valid_tuples(5, 4, 100, seed=20260815)
    assert [g.elements for g in again] == [g.elements for g in sample]


def test_bounds_hold_on_random_sample():
    for g in random_valid_tuples(60, 4, 150, seed=7):
        rep = sparsity_check(g)
        assert rep.holds, g
        assert rep.count <= rep.bound <= rep.weak_bound
        assert diagonal_sum_check(g), g
        assert min_element_check(g), g
