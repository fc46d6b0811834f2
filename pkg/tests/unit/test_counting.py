from fractions import Fraction
from math import factorial

import pytest

from macscifi.combinatorics.counting import (
    brick_tabloid_count,
    brick_tabloids,
    kreweras,
    multinomial,
    stirling2,
    ward,
    ward_alternating_sum,
    ward_numbers,
    ward_recurrence_check,
    ward_tilde,
)
from macscifi.combinatorics.dyck import catalan
from macscifi.combinatorics.partitions import Composition, Partition, partitions_of
from macscifi.exceptions import SizeMismatchError


def test_multinomial():
    assert multinomial((2, 1, 1)) == 12
    assert multinomial((3, -1)) == 0
    assert multinomial(()) == 1


def test_kreweras_small_values():
    assert kreweras(Partition((3,))) == 1
    assert kreweras(Partition((2, 1))) == 3
    assert kreweras(Partition((1, 1, 1))) == 1
    assert kreweras(Partition((2, 2))) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_kreweras_numbers_sum_to_catalan(n):
    assert sum(kreweras(lam) for lam in partitions_of(n)) == catalan(n)


def test_brick_tabloids():
    tabloids = brick_tabloids(Partition((2, 1)), Composition((3,)))
    assert tabloids == [((1, 2),), ((2, 1),)]
    assert brick_tabloid_count(Partition((2, 1)), Composition((2, 1))) == 1
    assert brick_tabloid_count(Partition((2, 1)), Composition((1, 1, 1))) == 0


def test_brick_tabloids_size_mismatch():
    with pytest.raises(SizeMismatchError):
        brick_tabloids(Partition((2,)), Composition((3,)))


def test_stirling2():
    assert stirling2(4, 2) == 7
    assert stirling2(5, 5) == 1
    assert stirling2(3, 0) == 0
    assert stirling2(-1, 0) == 0


def test_ward_small_rows():
    assert [ward(1, k) for k in range(1)] == [1]
    assert [ward(2, k) for k in range(2)] == [3, 1]
    assert ward(3, 0) == 15
    assert ward(2, 2) == 0


def test_ward_tilde_matches_ward():
    for n in range(1, 6):
        for k in range(n):
            assert ward_tilde(n, k) == ward(n, k)
    assert ward_tilde(2, 3) == Fraction(0)


def test_ward_numbers_row():
    assert ward_numbers(2) == {0: (Fraction(3), 3), 1: (Fraction(1), 1)}


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 6])
def test_ward_alternating_sum_is_factorial(n):
    assert ward_alternating_sum(n) == factorial(n)


def test_ward_recurrence():
    assert all(ward_recurrence_check(n) for n in range(1, 8))
