import pytest

from macscifi.combinatorics.matrices import matrices_of_total
from macscifi.shuffle.appendix import divided_difference_identity, lb_inclusion_exclusion_check
from macscifi.shuffle.fermionic import fermionic_check, oracle_check, shuffle_theorem_check
from macscifi.shuffle.involution import biword_check, phi_tilde_check, toward_lb_tilde_check
from macscifi.shuffle.lightning import (
    fib_reduction_check,
    lightning_bolt_check,
    lightning_bolt_vanishing_checks,
    lightning_bolt_z_check,
    stat_bar_closed_form_check,
    symmetry_check,
)
from macscifi.shuffle.mld import mld_generating_check, phi_check


def _with_nonzero_columns(rows, cols, size):
    return [
        m
        for m in matrices_of_total(rows, cols, size)
        if all(any(row[j] for row in m) for j in range(cols))
    ]


MLD_MATRICES = [m for size in (1, 2, 3) for m in _with_nonzero_columns(2, 2, size)]
LIGHTNING_K2 = [m for rows in (1, 2) for m in matrices_of_total(rows, 3, 1)]
SMALL_MATRICES = [m for rows in (1, 2) for size in (0, 1) for m in matrices_of_total(rows, 1, size)]


def _up_to(rows, cols, largest):
    return [
        m
        for r in range(1, rows + 1)
        for size in range(largest + 1)
        for m in matrices_of_total(r, cols, size)
    ]


LIGHTNING_K3 = [m for rows in (1, 2) for m in matrices_of_total(rows, 5, 2)]
HIGHER_K = [(k, m) for k in (3, 4) for m in _up_to(2, k - 1, k - 1)]
TAU_K5 = [(5, m) for m in _up_to(1, 4, 4)]


@pytest.mark.hypothesis
@pytest.mark.parametrize("n", [1, 2, 3])
def test_shuffle_theorem(n):
    assert shuffle_theorem_check(n)


@pytest.mark.hypothesis
@pytest.mark.slow
def test_shuffle_theorem_n4():
    assert shuffle_theorem_check(4)


@pytest.mark.hypothesis
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fermionic_formula_and_oracles(n):
    assert fermionic_check(n)
    assert oracle_check(n)


@pytest.mark.hypothesis
@pytest.mark.parametrize("matrix", MLD_MATRICES, ids=str)
def test_mld_generating_function_and_phi(matrix):
    assert mld_generating_check(matrix)
    assert phi_check(matrix)


@pytest.mark.hypothesis
@pytest.mark.parametrize("matrix", LIGHTNING_K2, ids=str)
def test_lightning_bolt_formula_k2(matrix):
    assert lightning_bolt_check(2, matrix)
    assert lightning_bolt_z_check(2, matrix)
    assert lightning_bolt_vanishing_checks(2, matrix)


@pytest.mark.hypothesis
@pytest.mark.parametrize("matrix", SMALL_MATRICES, ids=str)
def test_lightning_closed_forms_k2(matrix):
    assert stat_bar_closed_form_check(2, matrix)
    assert fib_reduction_check(2, matrix)
    assert symmetry_check(2, matrix)


@pytest.mark.hypothesis
@pytest.mark.parametrize("matrix", SMALL_MATRICES, ids=str)
def test_sign_reversing_involution_k2(matrix):
    assert toward_lb_tilde_check(2, matrix)
    assert biword_check(2, matrix)
    assert phi_tilde_check(matrix)


@pytest.mark.hypothesis
@pytest.mark.slow
@pytest.mark.parametrize("matrix", LIGHTNING_K3, ids=str)
def test_lightning_bolt_formula_k3(matrix):
    assert lightning_bolt_check(3, matrix)
    assert lightning_bolt_z_check(3, matrix)
    assert lightning_bolt_vanishing_checks(3, matrix)


@pytest.mark.hypothesis
@pytest.mark.slow
@pytest.mark.parametrize(("k", "matrix"), HIGHER_K, ids=str)
def test_lightning_closed_forms_higher_k(k, matrix):
    assert stat_bar_closed_form_check(k, matrix)
    assert fib_reduction_check(k, matrix)
    assert symmetry_check(k, matrix)


@pytest.mark.hypothesis
@pytest.mark.slow
@pytest.mark.parametrize(("k", "matrix"), HIGHER_K + TAU_K5, ids=str)
def test_sign_reversing_involution_higher_k(k, matrix):
    assert toward_lb_tilde_check(k, matrix)
    assert biword_check(k, matrix)


@pytest.mark.hypothesis
@pytest.mark.parametrize("matrix", list(matrices_of_total(2, 2, 3)), ids=str)
def test_lb_inclusion_exclusion(matrix):
    assert lb_inclusion_exclusion_check(matrix)


@pytest.mark.hypothesis
@pytest.mark.parametrize("k", [2, 3, 4])
def test_divided_difference_identity(k):
    assert divided_difference_identity(k)
