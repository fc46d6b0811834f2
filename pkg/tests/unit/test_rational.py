from fractions import Fraction

import pytest

from macscifi.algebra.laurent import Q as QL
from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction, format_rational, normalize, parse_rational
from macscifi.exceptions import ParseError, PoleAtPointError, ZeroDenominatorError


def test_parse_cancels_common_factors():
    value = parse_rational("(q^2 - 1)/(q - 1)")
    assert value == parse_rational("q + 1")
    assert value.is_polynomial()


def test_denominator_has_positive_leading_coefficient():
    assert str(parse_rational("1/(1 - q)")) == "-1 / (q - 1)"


def test_format_keeps_monomial_denominator_bare():
    assert str(parse_rational("q/t")) == "q / t"
    assert str(parse_rational("(q + 1)/t")) == "(q + 1) / t"


def test_format_polynomial_without_denominator(q, t):
    assert format_rational(q + t) == "q + t"
    assert format_rational(RationalFunction.constant(0)) == "0"


def test_equality_and_hash_ignore_declared_variables():
    one = RationalFunction.constant(1)
    cancelled = parse_rational("z/z")
    assert cancelled == one
    assert hash(cancelled) == hash(one)


def test_negative_powers_and_inverse(q):
    assert q**-2 * q**2 == 1
    assert (q + 1).inverse() * (q + 1) == 1
    assert parse_rational("q^-1") == q**-1


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDenominatorError):
        RationalFunction.constant(0).inverse()


def test_from_fraction_rejects_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        RationalFunction.from_fraction(QL, LaurentPoly())


def test_from_laurent_with_negative_exponents(q):
    assert RationalFunction.from_laurent(QL**-1 + 1) == (1 + q) / q
    assert RationalFunction.from_laurent(QL**-1).to_laurent() == QL**-1


def test_evaluate_numeric_binding():
    value = parse_rational("(q + t)/(q - 1)")
    assert value.evaluate({"q": 2, "t": 1}) == 3
    assert value.evaluate({"q": 2, "t": 1}).to_fraction() == Fraction(3)


def test_evaluate_partial_binding_keeps_other_variables(t):
    value = parse_rational("q*t + 1")
    assert value.evaluate({"q": 2}) == 2 * t + 1


def test_evaluate_symbolic_binding(q):
    value = parse_rational("q + t")
    assert value.evaluate({"t": q**-1}) == q + q**-1


def test_evaluate_at_pole_carries_point():
    with pytest.raises(PoleAtPointError) as excinfo:
        parse_rational("1/(q - 1)").evaluate({"q": 1})
    assert excinfo.value.point == {"q": 1}


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_rational("")
    with pytest.raises(ParseError):
        parse_rational("q $ t")
    with pytest.raises(ParseError):
        parse_rational("(q + t")
    with pytest.raises(ZeroDenominatorError):
        parse_rational("q/0")


def test_monomial_exponents():
    assert parse_rational("2*q^2/t").monomial_exponents() == (Fraction(2), {"q": 2, "t": -1})
    assert parse_rational("q + 1").monomial_exponents() is None


def test_constant_queries(q):
    assert RationalFunction.constant(Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    assert not q.is_constant()
    with pytest.raises(ValueError):
        q.to_fraction()


def test_variables_reports_used_names():
    assert parse_rational("z1 * q / z1").variables() == ("q",)
    assert parse_rational("q + t").variables() == ("q", "t")


def test_normalize_is_idempotent():
    value = parse_rational("(q*t - t)/(q - 1)")
    assert normalize(normalize(value)) == value
    assert value == parse_rational("t")
