import pytest

from macscifi.algebra.laurent import ONE, Q, ZERO
from macscifi.combinatorics.dyck import (
    alpha_of,
    area,
    bounce,
    bounce_vector,
    catalan,
    dyck_enumerate,
    from_runs,
    size,
    validate,
)
from macscifi.combinatorics.matrices import (
    as_matrix,
    binomial_pairs_exponent,
    csum,
    fibonacci_matrices,
    inclusion_exclusion_lb,
    lb,
    lb_at,
    lb_laurent,
    lb_tilde,
    lb_tilde_laurent,
    llb_set,
    matrices_of_total,
    matrices_with_margins,
    rsum,
    shape,
    subtract,
    total,
)
from macscifi.exceptions import IndexOutOfRangeError, NotADyckPathError


def test_validate_rejects_bad_paths():
    assert validate("NE") == "NE"
    with pytest.raises(NotADyckPathError):
        validate("EN")
    with pytest.raises(NotADyckPathError):
        validate("NNE")
    with pytest.raises(NotADyckPathError):
        validate("NXE")


def test_dyck_enumerate_counts_catalan():
    assert [len(dyck_enumerate(n)) for n in range(1, 6)] == [catalan(n) for n in range(1, 6)]
    assert len(dyck_enumerate(4)) == 14
    assert dyck_enumerate(2) == ("NENE", "NNEE")


def test_area_and_bounce():
    assert area("NNEE") == 1
    assert area("NENE") == 0
    assert bounce_vector("NNEE") == (2,)
    assert bounce("NNEE") == 0
    assert bounce_vector("NENE") == (1, 1)
    assert bounce("NENE") == 1
    assert bounce_vector("NNENEE") == (2, 1)


def test_alpha_of_and_runs():
    assert alpha_of("NNENEE") == (1, 2)
    assert from_runs([(2, 1), (1, 2)]) == "NNENEE"
    assert size("NNENEE") == 3


def test_matrix_helpers():
    m = as_matrix([[1, 2], [3, 4]])
    assert shape(m) == (2, 2)
    assert csum(m) == (3, 7)
    assert rsum(m) == (4, 6)
    assert total(m) == 10
    assert subtract(m, ((1, 1), (1, 1))) == ((0, 1), (2, 3))
    assert binomial_pairs_exponent(m) == 0 + 1 + 3 + 6


def test_as_matrix_rejects_ragged_rows():
    with pytest.raises(ValueError):
        as_matrix([[1, 2], [3]])


def test_matrix_enumeration():
    assert len(list(matrices_of_total(1, 2, 2))) == 3
    assert set(matrices_with_margins((1, 1), (1, 1))) == {((1, 0), (0, 1)), ((0, 1), (1, 0))}
    assert list(matrices_with_margins((1,), (2,))) == []


def test_fibonacci_matrices_single_row_counts():
    assert [len(fibonacci_matrices(1, cols)) for cols in range(1, 5)] == [1, 2, 3, 5]


def test_fibonacci_matrices_have_zero_first_column():
    for pattern in fibonacci_matrices(2, 3):
        assert all(row[0] == 0 for row in pattern)
        assert all(sum(row[j] for row in pattern) <= 1 for j in range(3))


def test_fibonacci_matrices_need_positive_size():
    with pytest.raises(IndexOutOfRangeError):
        fibonacci_matrices(0, 2)


def test_lightning_bolt_set():
    assert llb_set(2, 3, 3) == frozenset({(1, 2), (2, 2), (2, 3), (3, 3)})


def test_lb_at_range():
    m = ((1, 2), (2, 1))
    assert lb_at(m, (1, 2)) == 4
    assert lb_at(m, (2, 2)) == 4
    with pytest.raises(IndexOutOfRangeError):
        lb_at(m, (1, 1))


def test_lb_of_two_by_two():
    m = ((1, 2), (2, 1))
    assert lb_laurent(m) == (1 + Q + Q**2) ** 3
    assert lb(m).to_laurent() == (1 + Q + Q**2) ** 3


def test_lb_vanishes_where_tilde_does_not():
    m = ((0, 1),)
    assert lb_laurent(m) == ZERO
    assert lb_tilde_laurent(m) == ONE
    assert lb_tilde(m) == 1
    assert inclusion_exclusion_lb(m) == ZERO


def test_inclusion_exclusion_recovers_lb():
    for m in [((1, 2), (2, 1)), ((2, 1, 1),), ((1, 0), (1, 2))]:
        assert inclusion_exclusion_lb(m) == lb_laurent(m)
