import pytest

from macscifi.combinatorics.partitions import Partition, corner_removals
from macscifi.nabla.intersection import (
    f_coefficient_identity,
    has_polynomial_coefficients,
    intersection_poly,
    verify_frak_shift,
    verify_leading_ones_vanish,
    verify_nabla_identity,
    verify_vanishing_all,
)
from macscifi.verify.registry import corner_tuples

SMALL = list(corner_tuples(5, 3))
LARGER = [mus for mus in corner_tuples(6, 3) if mus not in SMALL]


def _ids(mus):
    return ";".join(",".join(map(str, mu)) for mu in mus)


@pytest.mark.hypothesis
@pytest.mark.parametrize("mus", [m for m in SMALL if len(m) > 1], ids=_ids)
def test_intersection_vanishes_under_low_perps(mus):
    assert verify_vanishing_all(mus)
    assert verify_leading_ones_vanish(mus)


@pytest.mark.hypothesis
@pytest.mark.parametrize("mus", SMALL, ids=_ids)
def test_perp_of_intersection_is_nabla_ek(mus):
    assert verify_nabla_identity(mus)
    assert verify_frak_shift(mus)
    assert f_coefficient_identity(mus)


@pytest.mark.hypothesis
@pytest.mark.parametrize("mus", SMALL, ids=_ids)
def test_intersection_coefficients_are_polynomials(mus):
    assert has_polynomial_coefficients(intersection_poly(mus))


@pytest.mark.hypothesis
def test_every_corner_of_a_staircase():
    mus = corner_removals(Partition((3, 2, 1)))
    assert len(mus) == 3
    assert verify_vanishing_all(mus)
    assert verify_nabla_identity(mus)


@pytest.mark.hypothesis
@pytest.mark.slow
@pytest.mark.parametrize("mus", LARGER, ids=_ids)
def test_intersection_identities_on_larger_shapes(mus):
    if len(mus) > 1:
        assert verify_vanishing_all(mus)
    assert verify_nabla_identity(mus)
