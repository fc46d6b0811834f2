from concurrent.futures import ThreadPoolExecutor

import pytest

from macscifi.combinatorics.partitions import Partition
from macscifi.exceptions import (
    DegreeMismatchError,
    DuplicatePartitionError,
    IndexOutOfRangeError,
    NotCoveredByCommonShapeError,
    SizeCapExceededError,
)
from macscifi.macdonald.hhl import hhl_macdonald
from macscifi.nabla import expansion
from macscifi.nabla.expansion import (
    from_htilde,
    htilde_inverse,
    htilde_matrix,
    mac_expand,
    nabla,
    nabla_inv,
)
from macscifi.nabla.ght import (
    en_htilde_expansion,
    eperp_mac_closed_form,
    nabla_en_closed_form,
    star_pairing_check,
    verify_ght,
)
from macscifi.nabla.intersection import (
    common_shape,
    f_coefficient_identity,
    has_polynomial_coefficients,
    intersection_poly,
    t_intersection,
    validate_partitions,
    verify_leading_ones_vanish,
    verify_nabla_identity,
    verify_vanishing,
    verify_vanishing_all,
)
from macscifi.symmetric.qsym import QSymExpansion
from macscifi.symmetric.sym import convert, e, element, equal, h


def test_htilde_matrix_rows(q, t):
    assert htilde_matrix(2) == ((1, 1 + q), (1, 1 + t))


def test_mac_expand_e2(q, t):
    coords = mac_expand(e(2))
    assert coords.basis == "Htilde"
    assert coords.coefficient((2,)) == (q - t).inverse()
    assert coords.coefficient((1, 1)) == -(q - t).inverse()


def test_mac_expand_checks_degree():
    with pytest.raises(DegreeMismatchError):
        mac_expand(e(2), n=3)


def test_mac_expand_of_htilde_is_identity():
    f = element("Htilde", (2, 1))
    assert mac_expand(f) is f


def test_from_htilde_recovers_monomials():
    assert equal(from_htilde(mac_expand(h(3))), h(3))


def test_nabla_e1_is_fixed():
    assert equal(nabla(e(1)), e(1))


def test_nabla_e2_in_schur():
    assert str(convert(nabla(e(2)), "s")) == "(q + t)*s[1,1] + s[2]"


def test_nabla_keeps_input_basis():
    assert nabla(e(2)).basis == "e"
    assert nabla(element("Htilde", (2,))).basis == "Htilde"


def test_nabla_inverse_undoes_nabla():
    f = element("s", (2, 1)) + h(3)
    assert equal(nabla_inv(nabla(f)), f)


def test_nabla_of_degree_zero():
    assert nabla(e(0)) == e(0)


def test_nabla_respects_cap():
    with pytest.raises(SizeCapExceededError):
        nabla(e(3), cap=2)


def test_validate_partitions_errors():
    with pytest.raises(DuplicatePartitionError):
        validate_partitions([(2,), (2,)])
    with pytest.raises(NotCoveredByCommonShapeError):
        validate_partitions([(2,), (1,)])
    with pytest.raises(NotCoveredByCommonShapeError):
        validate_partitions([(3,), (1, 1, 1)])
    with pytest.raises(NotCoveredByCommonShapeError):
        validate_partitions([])


def test_common_shape():
    assert common_shape([(2,), (1, 1)]) == (2, 1)
    assert common_shape([(1,)]) == (2,)
    assert common_shape([()]) == (1,)


def test_t_intersection(q, t):
    assert t_intersection([(2,), (1, 1)]) == 1
    assert t_intersection([(2, 1), (1, 1, 1)]) == t


def test_intersection_of_two_cells():
    assert intersection_poly([(2,), (1, 1)]) == QSymExpansion("F", 2, {(2,): 1})


def test_single_partition_intersection_is_htilde():
    assert intersection_poly([(2, 1)]) == hhl_macdonald(Partition((2, 1)))


def test_intersection_order_does_not_matter():
    a = intersection_poly([(2, 1), (1, 1, 1)])
    b = intersection_poly([(1, 1, 1), (2, 1)])
    assert a == b


def test_intersection_has_polynomial_coefficients():
    assert has_polynomial_coefficients(intersection_poly([(3, 2), (3, 1, 1), (2, 2, 1)]))


def test_identities_on_two_cells():
    mus = [(2,), (1, 1)]
    assert verify_vanishing_all(mus)
    assert verify_nabla_identity(mus)
    assert verify_leading_ones_vanish(mus)
    assert f_coefficient_identity(mus)


def test_vanishing_index_range():
    with pytest.raises(IndexOutOfRangeError):
        verify_vanishing([(2,), (1, 1)], 1)


def test_en_htilde_expansion_is_en():
    for n in (1, 2, 3):
        assert equal(en_htilde_expansion(n), e(n))


def test_nabla_en_closed_form():
    for n in (1, 2, 3):
        assert equal(nabla_en_closed_form(n), nabla(e(n)))


def test_star_pairing_check_small_cases():
    assert star_pairing_check(e(1), Partition((2,)))
    assert star_pairing_check(element("Htilde", (1,)), Partition((1, 1)))
    assert star_pairing_check(element("Htilde", ()), Partition((2,)))


def test_verify_ght_on_single_cells():
    assert verify_ght(Partition((1,)), Partition((1,)))
    assert verify_ght(Partition(), Partition((2,)))


def test_star_pairing_rejects_large_degree():
    with pytest.raises(ValueError, match="exceeds"):
        star_pairing_check(e(3), Partition((2,)))


def test_eperp_closed_form_range():
    with pytest.raises(ValueError, match="m must lie"):
        eperp_mac_closed_form(Partition((2,)), 3)
    assert eperp_mac_closed_form(Partition((2,)), 1).degree == 1


def test_htilde_inverse_is_computed_once_across_threads(mocker, monkeypatch):
    monkeypatch.setattr(expansion, "_inverses", {})
    spy = mocker.spy(expansion, "invert")
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(htilde_inverse, [3] * 8))
    assert spy.call_count == 1
    assert all(result is results[0] for result in results)
