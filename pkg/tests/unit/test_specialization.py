from fractions import Fraction

import pytest

from macscifi.combinatorics.dyck import alpha_of
from macscifi.combinatorics.partitions import Composition, Partition
from macscifi.exceptions import IndexOutOfRangeError, PoleAtPointError, SizeMismatchError
from macscifi.specialization.kreweras import (
    intersection_at_11,
    kreweras_h_expansion,
    kreweras_table_check,
    n_factorial_over_k_check,
    nabla_en_11_e_expansion,
    nabla_en_11_h_expansion,
    pair_with_e1n,
    redistribution_holds,
    specialize_11,
    verify_kreweras_theorem,
    verify_nabla_en_11,
    ward_check,
    ward_route,
)
from macscifi.specialization.psi import (
    dyck_paths_with_runs,
    p_block,
    psi,
    psi_check,
    psi_codomain,
    psi_inverse,
    runs,
)
from macscifi.symmetric.qsym import QSymExpansion
from macscifi.symmetric.sym import SymExpansion, element, h


def test_specialize_11(q, t):
    value = QSymExpansion("F", 2, {(2,): 1, (1, 1): q + t})
    assert specialize_11(value) == QSymExpansion("F", 2, {(2,): 1, (1, 1): 2})


def test_specialize_11_reports_pole_index(q):
    value = QSymExpansion("F", 1, {(1,): (q - 1).inverse()})
    with pytest.raises(PoleAtPointError) as excinfo:
        specialize_11(value)
    assert excinfo.value.index == (1,)


def test_kreweras_h_expansion():
    assert str(kreweras_h_expansion(3, 5)) == "2h[2,2,1] - h[3,1,1]"
    assert str(kreweras_h_expansion(2, 2)) == "h[2]"
    assert kreweras_h_expansion(1, 2) == SymExpansion("h", 2, {(1, 1): 1})


@pytest.mark.parametrize("k, n", [(0, 1), (4, 2)])
def test_kreweras_h_expansion_range(k, n):
    with pytest.raises(IndexOutOfRangeError):
        kreweras_h_expansion(k, n)


def test_intersection_at_11():
    assert intersection_at_11([(2,), (1, 1)]) == h(2)


def test_kreweras_theorem_small_cases():
    assert verify_kreweras_theorem([(2,), (1, 1)])
    assert verify_kreweras_theorem([(2,)])
    assert verify_kreweras_theorem([(3, 1), (2, 2)])


def test_nabla_en_at_one_one():
    assert nabla_en_11_e_expansion(2) == SymExpansion("e", 2, {(2,): 1, (1, 1): 1})
    assert nabla_en_11_h_expansion(1) == h(1)
    assert verify_nabla_en_11(2)
    assert verify_nabla_en_11(3)


def test_pair_with_e1n():
    assert pair_with_e1n(h(2)) == 1
    assert pair_with_e1n(element("h", (1, 1))) == 2
    assert pair_with_e1n(element("e", (2,))) == 1


def test_redistribution_and_ward_route():
    assert redistribution_holds(Partition((1,)), 2, 2)
    assert ward_route(1, 3) == Fraction(6)
    assert ward_route(2, 2) == 1


def test_n_factorial_over_k():
    assert n_factorial_over_k_check([(2,), (1, 1)])
    assert n_factorial_over_k_check([(2, 1)])


def test_ward_check():
    assert all(ward_check(n) for n in range(1, 5))


def test_runs():
    assert runs("NNENEE") == [(2, 1), (1, 2)]
    assert runs("") == []


def test_dyck_paths_with_runs():
    assert set(dyck_paths_with_runs((1, 2))) == {"NENNEE", "NNENEE"}
    assert dyck_paths_with_runs(()) == [""]


def test_p_block():
    assert p_block((1, 2)) == "NEENEEE"


def test_psi_and_inverse():
    assert psi("NE", ((1,),)) == "NNEE"
    assert psi_inverse("NNEE", (1,)) == ("NE", (Composition((1,)),))


def test_psi_on_a_three_run_path():
    path = "N" * 5 + "E" * 3 + "N" * 3 + "E" * 4 + "N" * 2 + "E" * 3
    tabloid = ((2, 1), (1, 3), (1, 1, 1))
    image = "N" * 5 + p_block((2, 1)) + "N" * 3 + p_block((1, 3)) + "N" * 2 + p_block((1, 1, 1))
    assert p_block((2, 1)) == "NEEENEE"
    assert psi(path, tabloid) == image
    assert sorted(alpha_of(image), reverse=True) == [4, 3, 2, 2, 2, 2, 2]
    assert psi_inverse(image, (3, 2, 1, 1, 1, 1, 1)) == (
        path,
        tuple(Composition(row) for row in tabloid),
    )


def test_psi_rejects_mismatched_tabloid():
    with pytest.raises(SizeMismatchError):
        psi("NE", ((2,),))
    with pytest.raises(SizeMismatchError):
        psi_inverse("NENE", (1,))


def test_psi_codomain():
    assert psi_codomain((1,)) == {"NNEE"}


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (1, 1, 1), (2, 2)])
def test_psi_is_a_bijection(lam):
    assert psi_check(lam)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_kreweras_formula_matches_published_rows(k):
    assert kreweras_table_check(k)


def test_kreweras_table_range():
    with pytest.raises(IndexOutOfRangeError):
        kreweras_table_check(7)
