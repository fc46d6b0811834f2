import pytest

from macscifi.algebra.rational import parse_rational
from macscifi.combinatorics.partitions import (
    Composition,
    Partition,
    arm,
    augmented_staircase,
    biexponent,
    coarm,
    coleg,
    compositions_of,
    corner_removals,
    d_alphabet,
    hook_products,
    intersect,
    leg,
    partitions_of,
    pi_product,
    plus_ones,
    remove_cell,
    removable_corners,
    t_weight,
    union,
)
from macscifi.exceptions import CellNotInShapeError, NotRemovableError, SizeMismatchError


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_parse_and_print():
    mu = Partition.parse("3, 2, 1")
    assert mu == (3, 2, 1)
    assert str(mu) == "3,2,1"
    assert Partition.parse("[2,1]") == (2, 1)
    assert Partition.parse("") == ()


def test_partition_parse_rejects_garbage():
    with pytest.raises(ValueError, match="cannot parse"):
        Partition.parse("2,x")


def test_conjugate_and_n():
    mu = Partition((3, 1))
    assert mu.conjugate() == (2, 1, 1)
    assert mu.n() == 1
    assert mu.conjugate().n() == 3
    assert Partition().conjugate() == ()


def test_cells_are_french_row_col():
    assert Partition((2, 1)).cells() == [(1, 1), (1, 2), (2, 1)]
    assert Partition((2, 1)).has_cell((2, 1))
    assert not Partition((2, 1)).has_cell((2, 2))


def test_partitions_of_in_reverse_lex_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(0) == ((),)


def test_compositions_of_counts_powers_of_two():
    assert len(compositions_of(5)) == 16
    assert set(compositions_of(3)) == {(3,), (2, 1), (1, 2), (1, 1, 1)}


def test_composition_descent_set_round_trip():
    alpha = Composition((2, 1, 3))
    assert alpha.descent_set() == frozenset({2, 3})
    assert Composition.from_set({2, 3}, 6) == alpha


def test_composition_from_set_bounds():
    with pytest.raises(ValueError):
        Composition.from_set({4}, 4)


def test_refinements_and_coarsenings():
    assert set(Composition((3,)).refinements()) == set(compositions_of(3))
    assert set(Composition((1, 1, 1)).coarsenings()) == set(compositions_of(3))
    assert Composition((1, 3, 2)).sorted_partition() == (3, 2, 1)


def test_arm_leg_coarm_coleg():
    mu = Partition((3, 2))
    assert arm(mu, (1, 1)) == 2
    assert leg(mu, (1, 1)) == 1
    assert coarm(mu, (2, 2)) == 1
    assert coleg(mu, (2, 2)) == 1


def test_cell_statistics_reject_outside_cells():
    with pytest.raises(CellNotInShapeError):
        arm(Partition((2, 1)), (2, 2))


def test_weights(q, t):
    assert t_weight(Partition((2, 1))) == q * t
    assert biexponent(Partition((2, 1))) == 1 + q + t
    assert d_alphabet(Partition((1,))).evaluate({"q": 0, "t": 0}) == 0


def test_pi_product_and_hooks():
    assert pi_product(Partition((2,))) == parse_rational("1 - q")
    first, second = hook_products(Partition((1,)))
    assert first == parse_rational("1 - t")
    assert second == parse_rational("1 - q")


def test_removable_corners_top_to_bottom():
    assert removable_corners(Partition((3, 2, 2))) == [(3, 2), (1, 3)]
    assert removable_corners(Partition((2, 1))) == [(2, 1), (1, 2)]


def test_remove_cell():
    assert remove_cell(Partition((2, 1)), (2, 1)) == (2,)
    with pytest.raises(NotRemovableError):
        remove_cell(Partition((2, 1)), (1, 1))


def test_corner_removals_and_common_shapes():
    subs = corner_removals(Partition((3, 2, 1)))
    assert subs == [(3, 2), (3, 1, 1), (2, 2, 1)]
    assert intersect(*subs) == (2, 1)
    assert union(*subs) == (3, 2, 1)


def test_intersect_needs_input():
    with pytest.raises(SizeMismatchError):
        intersect()


def test_augmented_staircase():
    assert augmented_staircase(2) == (2, 2, 1)
    assert augmented_staircase(3) == (3, 3, 3, 2, 1)


def test_plus_ones():
    assert plus_ones((2, 1)) == (3, 2)
    assert plus_ones((2,), 3) == (3, 1, 1)
    assert plus_ones((), 2) == (1, 1)
