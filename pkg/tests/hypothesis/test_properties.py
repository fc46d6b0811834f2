from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.dyck import dyck_enumerate, from_runs
from macscifi.combinatorics.partitions import Composition, Partition, arm, leg
from macscifi.specialization.psi import runs
from macscifi.symmetric.qsym import qsym_to_sym, sym_to_qsym
from macscifi.symmetric.sym import convert, element, equal

pytestmark = pytest.mark.hypothesis

PROPERTY_SETTINGS = settings(deadline=None, max_examples=50)

partitions = st.lists(st.integers(1, 5), max_size=5).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)
compositions = st.lists(st.integers(1, 4), max_size=5).map(Composition)
monomials = st.builds(
    lambda c, a, b: LaurentPoly.monomial(Fraction(c), q=a, t=b),
    st.integers(-3, 3),
    st.integers(-2, 2),
    st.integers(-2, 2),
)
laurent_polys = st.lists(monomials, max_size=3).map(lambda terms: sum(terms, LaurentPoly()))
rationals = st.builds(RationalFunction.from_laurent, laurent_polys)


@PROPERTY_SETTINGS
@given(partitions)
def test_conjugation_is_an_involution(mu):
    assert mu.conjugate().conjugate() == mu
    assert mu.conjugate().size == mu.size


@PROPERTY_SETTINGS
@given(partitions)
def test_arm_and_leg_sums(mu):
    cells = mu.cells()
    assert sum(leg(mu, cell) for cell in cells) == mu.n()
    assert sum(arm(mu, cell) for cell in cells) == mu.conjugate().n()


@PROPERTY_SETTINGS
@given(compositions)
def test_descent_set_round_trip(alpha):
    assert Composition.from_set(alpha.descent_set(), alpha.size) == alpha


@PROPERTY_SETTINGS
@given(compositions)
def test_refinements_contain_the_composition(alpha):
    assert alpha in set(alpha.refinements())
    assert alpha in set(alpha.coarsenings())


@PROPERTY_SETTINGS
@given(rationals, rationals, rationals)
def test_rational_functions_form_a_ring(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@PROPERTY_SETTINGS
@given(rationals, rationals)
def test_division_undoes_multiplication(a, b):
    assume(not b.is_zero())
    assert (a * b) / b == a


@PROPERTY_SETTINGS
@given(st.sampled_from([(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]), st.sampled_from("ehms"))
def test_sym_qsym_round_trip(parts, basis):
    f = element(basis, parts)
    assert equal(qsym_to_sym(sym_to_qsym(f)), f)
    assert equal(convert(convert(f, "m"), basis), f)


@PROPERTY_SETTINGS
@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(dyck_enumerate(n))))
def test_runs_round_trip(path):
    assert from_runs(runs(path)) == path
