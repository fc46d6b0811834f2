import pytest

from macscifi.algebra.laurent import LaurentPoly
from macscifi.combinatorics.partitions import Partition
from macscifi.exceptions import (
    DegreeMismatchError,
    IndexOutOfRangeError,
    NotSymmetricError,
    SizeCapExceededError,
    SizeMismatchError,
)
from macscifi.macdonald.diagram import Diagram
from macscifi.macdonald.tuples import CellTuple
from macscifi.shuffle.appendix import (
    divided_difference_identity,
    eta_shift,
    lb_inclusion_exclusion_check,
    low_degree_vanishing_check,
    monomial_symmetric,
    monomial_symmetric_sum_check,
    monomial_symmetric_sum_expected,
    symmetric_polynomial_check,
)
from macscifi.shuffle.fermionic import (
    fermionic_check,
    fermionic_F,
    hilbert_series,
    oracle_check,
    qt_catalan,
    shuffle_theorem_check,
    u_statistic,
)
from macscifi.macdonald.tuples import pinv_exponent
from macscifi.shuffle.involution import (
    biword,
    biword_pinv,
    biwords_of,
    is_valid_biword,
    phi_tilde,
    tau,
)
from macscifi.shuffle.lightning import (
    admissible,
    eta,
    leading_gap,
    lightning_bolt_check,
    lightning_bolt_z_check,
    pad_columns,
    reduced_rectangle,
)
from macscifi.shuffle.mld import (
    LabeledDyckPath,
    area_prime,
    enumerate_mld,
    in_mld_of_matrix,
    intervals,
    last_column_cell,
    mld_generating_check,
    mld_of_matrix,
    phi,
    phi_check,
    reduce_matrix,
    shuffle_formula,
)


def test_labeled_path_requires_permutation():
    with pytest.raises(SizeMismatchError):
        LabeledDyckPath("NE", (2,))


def test_labeled_path_statistics(example_mld):
    assert example_mld.steps == (4, 1, 5, 6, 2, 3)
    assert example_mld.area_prime() == 6
    assert example_mld.bounce() == 3
    assert example_mld.is_modified()
    assert example_mld.to_json() == {"path": "NNNENNENEEEE", "labels": [3, 2, 6, 5, 1, 4]}


def test_heights_and_corners():
    path = LabeledDyckPath("NENE", (2, 1))
    assert path.heights == (1, 2)
    assert path.corners() == [(1, 1)]
    assert path.is_modified()
    assert not LabeledDyckPath("NENE", (1, 2)).is_modified()


def test_area_prime_counts_increasing_pairs():
    assert area_prime("NNEE", (1, 2)) == 0
    assert area_prime("NNEE", (2, 1)) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mld_count_is_parking_number(n):
    assert len(enumerate_mld(n)) == (n + 1) ** (n - 1)


def test_enumerate_mld_respects_cap():
    with pytest.raises(SizeCapExceededError):
        enumerate_mld(3, cap=2)


def test_shuffle_formula_two():
    assert str(shuffle_formula(2)) == "F[2] + (q + t)*F[1,1]"


def test_intervals_split_rows_by_column():
    assert intervals(((1, 2), (2, 1))) == {
        (1, 1): (1,),
        (1, 2): (2, 3),
        (2, 1): (4, 5),
        (2, 2): (6,),
    }


def test_mld_of_matrix_membership(example_mld):
    matrix = ((1, 2), (2, 1))
    assert example_mld in mld_of_matrix(matrix)
    assert in_mld_of_matrix(example_mld, matrix)
    assert not in_mld_of_matrix(example_mld, ((2, 1), (1, 2)))


def test_mld_of_matrix_edge_cases():
    assert mld_of_matrix(((0, 0),)) == [LabeledDyckPath("", ())]
    with pytest.raises(SizeMismatchError):
        mld_of_matrix(((1, 0),))


def test_last_column_cell_and_reduction():
    assert last_column_cell(((1, 0), (2, 1))) == (2, 2)
    assert reduce_matrix(((1, 2), (2, 1)), (1, 2)) == ((1, 0), (2, 1))
    assert reduce_matrix(((1, 1),), (1, 2)) == ((1,),)
    with pytest.raises(SizeMismatchError):
        last_column_cell(((0, 0),))


def test_phi_on_example(example_mld):
    image = phi(((1, 2), (2, 1)), example_mld)
    assert image.reduced == ((1, 0), (2, 1))
    assert image.path == LabeledDyckPath("NNNENEEE", (4, 3, 1, 2))
    assert image.word == (0, 1, 0, 1)


def test_matrix_identities_on_example():
    assert mld_generating_check(((1, 2), (2, 1)))
    assert phi_check(((1, 2), (2, 1)))


def test_qt_catalan_and_hilbert_series(q, t):
    assert qt_catalan(2) == q + t
    assert qt_catalan(3) == q**3 + q**2 * t + q * t + q * t**2 + t**3
    assert hilbert_series(2) == 1 + q + t


def test_u_statistic():
    assert u_statistic((1, 2)) == (3, 2)
    assert u_statistic((2, 1)) == (2, 2)


def test_fermionic_f(q, t):
    assert fermionic_F((2,)) == q + t
    with pytest.raises(SizeMismatchError):
        fermionic_F((2,), n=3)


def test_shuffle_and_fermionic_identities_small():
    assert shuffle_theorem_check(2)
    assert fermionic_check(3)
    assert oracle_check(3)
    assert oracle_check(0)


def test_biword_validity():
    assert is_valid_biword(((1, 1), (1, 2)))
    assert is_valid_biword(((1, 2), (1, 1)))
    assert not is_valid_biword(((2, 1), (1, 2)))
    assert is_valid_biword(((1, 2), (2, 1), (2, 2), (1, 1), (1, 2), (2, 1)))


def test_biword_pinv():
    assert biword_pinv(((1, 1), (1, 1))) == 1
    assert biword_pinv(((1, 2), (2, 1), (2, 2), (1, 1), (1, 2), (2, 1))) == 6


def test_biwords_of():
    assert biwords_of(((1,),)) == [((1, 1),)]
    assert set(biwords_of(((1, 1),))) == {((1, 1), (1, 2)), ((1, 2), (1, 1))}


def test_biword_needs_one_cell_per_column():
    diagram = Diagram.from_partition(Partition((1, 1)))
    cells = CellTuple.of(diagram, [[(1, 1), (2, 1)]])
    with pytest.raises(SizeMismatchError):
        biword(cells)


def test_admissible_pads_and_checks_size():
    assert admissible(2, ((1,),)) == ((1, 0, 0),)
    with pytest.raises(SizeMismatchError):
        admissible(2, ((1, 1),))
    with pytest.raises(IndexOutOfRangeError):
        admissible(1, ((),))
    with pytest.raises(SizeMismatchError):
        pad_columns(((0, 0, 0, 1),), 3)


def test_eta_skips_the_index():
    assert eta(3, 2, 1) == 1
    assert eta(3, 2, 2) == 3
    with pytest.raises(IndexOutOfRangeError):
        eta(3, 1, 3)


def test_leading_gap():
    assert leading_gap(3, ((0, 1, 1, 0, 0),))
    assert not leading_gap(3, ((1, 1, 0, 0, 0),))


@pytest.mark.parametrize("matrix", [((1,),), ((0, 1),), ((0, 0, 1),), ((1,), (0,))])
def test_lightning_bolt_k2(matrix):
    assert lightning_bolt_check(2, matrix)


def test_lightning_bolt_z_modes():
    assert lightning_bolt_z_check(2, ((0, 1),))
    assert lightning_bolt_z_check(2, ((0, 1),), mode="randomized", trials=2, seed=3)
    with pytest.raises(ValueError, match="z mode"):
        lightning_bolt_z_check(2, ((0, 1),), mode="other")


def test_appendix_identities():
    assert lb_inclusion_exclusion_check(((1, 2), (2, 1)))
    assert lb_inclusion_exclusion_check(())
    assert divided_difference_identity(3)


def _z(j):
    return LaurentPoly.variable(f"z{j}")


def test_monomial_symmetric():
    assert monomial_symmetric((1,), 2) == _z(1) + _z(2)
    assert monomial_symmetric((2, 1), 2) == _z(1) ** 2 * _z(2) + _z(1) * _z(2) ** 2
    assert monomial_symmetric((1, 1, 1), 2).is_zero()
    assert monomial_symmetric((), 3) == LaurentPoly.constant(1)


def test_eta_shift_skips_the_index():
    poly = _z(1) * _z(2) ** 2
    assert eta_shift(3, 1, poly) == _z(2) * _z(3) ** 2
    assert eta_shift(3, 2, poly) == _z(1) * _z(3) ** 2
    assert eta_shift(3, 3, poly) == poly
    with pytest.raises(IndexOutOfRangeError):
        eta_shift(3, 4, poly)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_low_degree_sums_vanish(k):
    assert all(low_degree_vanishing_check(k, d) for d in range(k - 1))


def test_low_degree_rejects_top_degree():
    with pytest.raises(DegreeMismatchError):
        low_degree_vanishing_check(3, 2)


@pytest.mark.parametrize(
    ("k", "lam", "expected"),
    [
        (2, (), -1),
        (2, (1,), 1),
        (3, (1, 1), 1),
        (4, (2, 1), -2),
        (4, (1, 1, 1), 1),
        (4, (1,), 1),
    ],
)
def test_monomial_symmetric_sum(k, lam, expected):
    assert monomial_symmetric_sum_expected(k, Partition(lam)) == expected
    assert monomial_symmetric_sum_check(k, Partition(lam))


def test_monomial_symmetric_sum_too_large():
    with pytest.raises(DegreeMismatchError):
        monomial_symmetric_sum_check(3, Partition((3,)))


def test_symmetric_polynomial_sum():
    e2 = _z(1) * _z(2) + _z(1) * _z(3) + _z(2) * _z(3)
    p2 = _z(1) ** 2 + _z(2) ** 2 + _z(3) ** 2
    assert symmetric_polynomial_check(4, e2 * 3 - p2)
    p1 = _z(1) + _z(2) + _z(3)
    assert symmetric_polynomial_check(4, monomial_symmetric((2, 1), 3) + e2 * p1)


def test_symmetric_polynomial_sum_rejects_bad_input():
    with pytest.raises(NotSymmetricError):
        symmetric_polynomial_check(3, _z(1) ** 2)
    with pytest.raises(DegreeMismatchError):
        symmetric_polynomial_check(3, _z(1) + _z(1) * _z(2))
    with pytest.raises(IndexOutOfRangeError):
        symmetric_polynomial_check(3, _z(3))


def _reduced_staircase_shape():
    return Diagram(((1, 4), (1, 4), (1, 4), (2, 4)))


def test_reduced_and_non_reduced_tuples():
    diagram = _reduced_staircase_shape()
    reduced = CellTuple.of(
        diagram, [[(3, 3), (1, 1)], [(3, 2), (3, 4), (1, 3)], [(2, 2)], [(2, 4)]]
    )
    other = CellTuple.of(diagram, [[(2, 3), (1, 1), (1, 3)], [(3, 1), (3, 4), (2, 2)], [(3, 2)]])
    assert reduced.gamma_vector() == (0, 0, 0)
    assert reduced.is_reduced()
    assert other.gamma_vector() == (1, 1, 0)
    assert not other.is_reduced()
    assert reduced.c_vector() == (1, 2, 2, 2)
    assert other.c_vector() == (2, 2, 2, 1)


def test_tau_splits_at_the_first_splittable_cell():
    rectangle = reduced_rectangle(6)
    cells = CellTuple.of(rectangle, [[(4, 3), (3, 1)], [(3, 3), (1, 1)], [(2, 2)]])
    image = CellTuple.of(rectangle, [[(4, 4), (3, 2)], [(3, 4), (1, 1)], [(2, 3)]])
    assert cells.is_reduced() and cells.is_packed()
    assert tau(cells) == image
    assert tau(image) == cells
    assert pinv_exponent(image) == pinv_exponent(cells)
    assert abs(image.length - cells.length) == 1


def test_tau_fixed_tuple_and_its_biword():
    matrix = ((1, 2, 0, 0, 0, 0), (2, 1, 0, 0, 0, 0))
    cells = CellTuple.of(
        reduced_rectangle(7), [[(2, 1), (1, 4), (2, 5)], [(1, 2), (2, 3), (1, 6)]]
    )
    word = ((1, 2), (2, 1), (2, 2), (1, 1), (1, 2), (2, 1))
    assert tau(cells) == cells
    assert biword(cells) == word
    assert word in biwords_of(matrix)
    assert biword_pinv(word) == pinv_exponent(cells) == 6
    reduced, bits = phi_tilde(matrix, word)
    assert reduced == ((2, 1), (2, 2), (1, 1), (2, 1))
    assert bits == (1, 0, 0, 1)
    assert biword_pinv(reduced) == 3
