"""Exact rational functions in q, t and named auxiliaries.

Values are elements of sympy's sparse fraction field over QQ. Every operation
returns the cancelled form: numerator and denominator are coprime integer
polynomials and the denominator's leading coefficient (lex order on the
variable order q, t, indexed auxiliaries, other names) is positive. That form
does not depend on which extra variables a field declares, so values living in
different fields compare and hash consistently.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from sympy.polys.domains import QQ
from sympy.polys.fields import FracField

from macscifi.exceptions import ParseError, PoleAtPointError, ZeroDenominatorError

from .laurent import (
    BASE_VARIABLES,
    LaurentPoly,
    Monomial,
    format_terms,
    order_variables,
)

Scalar = Union[int, Fraction]
Bindable = Union[int, Fraction, "RationalFunction", LaurentPoly]


@lru_cache(maxsize=256)
def _field(names: tuple[str, ...]) -> Any:
    return FracField(names, QQ)


def _qq(value: Scalar) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(coeff: Any) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _named_terms(poly: Any, names: tuple[str, ...]) -> list[tuple[Monomial, Fraction]]:
    out = []
    for monom, coeff in poly.items():
        mono = tuple((name, exp) for name, exp in zip(names, monom, strict=True) if exp)
        out.append((mono, _to_fraction(coeff)))
    out.sort()
    return out


class RationalFunction:
    """Element of Q(q, t, auxiliaries) kept in cancelled form."""

    __slots__ = ("_names", "_elem", "_hash")

    def __init__(self, names: tuple[str, ...], elem: Any) -> None:
        self._names = names
        self._elem = elem
        self._hash: int | None = None

    # construction

    @classmethod
    def constant(cls, value: Scalar, names: Iterable[str] = BASE_VARIABLES) -> RationalFunction:
        ordered = order_variables(names)
        field = _field(ordered)
        return cls(ordered, field.ground_new(_qq(value)))

    @classmethod
    def variable(cls, name: str) -> RationalFunction:
        ordered = order_variables({*BASE_VARIABLES, name})
        field = _field(ordered)
        return cls(ordered, field.gens[ordered.index(name)])

    @classmethod
    def from_laurent(cls, poly: LaurentPoly, names: Iterable[str] = ()) -> RationalFunction:
        ordered = order_variables({*BASE_VARIABLES, *poly.varset, *names})
        field = _field(ordered)
        ring = field.ring
        shift = {name: min(0, poly.degree_in(name)[0]) for name in ordered}
        numer: dict[tuple[int, ...], Any] = {}
        for mono, coeff in poly:
            exps = dict(mono)
            key = tuple(exps.get(name, 0) - shift[name] for name in ordered)
            numer[key] = _qq(coeff)
        denom_key = tuple(-shift[name] for name in ordered)
        num = ring.from_dict(numer) if numer else ring.zero
        den = ring.from_dict({denom_key: QQ.one})
        return cls(ordered, field.new(num, den))

    @classmethod
    def from_fraction(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
        if den.is_zero():
            raise ZeroDenominatorError("denominator is zero")
        return cls.from_laurent(num) / cls.from_laurent(den)

    @classmethod
    def parse(cls, text: str) -> RationalFunction:
        return _Parser(text).parse()

    # field plumbing

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def _lift(self, names: tuple[str, ...]) -> Any:
        if names == self._names:
            return self._elem
        return self._elem.set_field(_field(names))

    @staticmethod
    def _coerce(other: object) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int | Fraction):
            return RationalFunction.constant(other)
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other)
        return None

    def _unify(self, other: RationalFunction) -> tuple[tuple[str, ...], Any, Any]:
        if self._names == other._names:
            return self._names, self._elem, other._elem
        names = order_variables({*self._names, *other._names})
        return names, self._lift(names), other._lift(names)

    def _binary(self, other: object, op: str) -> RationalFunction:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        names, a, b = self._unify(rhs)
        if op == "+":
            return RationalFunction(names, a + b)
        if op == "-":
            return RationalFunction(names, a - b)
        if op == "*":
            return RationalFunction(names, a * b)
        if not b:
            raise ZeroDenominatorError("division by zero rational function")
        return RationalFunction(names, a / b)

    def __add__(self, other: object) -> RationalFunction:
        if isinstance(other, int) and other == 0:
            return self
        return self._binary(other, "+")

    def __radd__(self, other: object) -> RationalFunction:
        return self.__add__(other)

    def __sub__(self, other: object) -> RationalFunction:
        return self._binary(other, "-")

    def __rsub__(self, other: object) -> RationalFunction:
        return (-self).__add__(other)

    def __mul__(self, other: object) -> RationalFunction:
        return self._binary(other, "*")

    def __rmul__(self, other: object) -> RationalFunction:
        return self._binary(other, "*")

    def __truediv__(self, other: object) -> RationalFunction:
        return self._binary(other, "/")

    def __rtruediv__(self, other: object) -> RationalFunction:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __neg__(self) -> RationalFunction:
        return RationalFunction(self._names, -self._elem)

    def __pos__(self) -> RationalFunction:
        return self

    def __pow__(self, exponent: int) -> RationalFunction:
        field = _field(self._names)
        if exponent >= 0:
            return RationalFunction(self._names, self._elem**exponent)
        if not self._elem:
            raise ZeroDenominatorError("zero has no inverse")
        m = -exponent
        return RationalFunction(
            self._names, field.new(self._elem.denom**m, self._elem.numer**m)
        )

    def inverse(self) -> RationalFunction:
        return self ** (-1)

    def __bool__(self) -> bool:
        return bool(self._elem)

    def is_zero(self) -> bool:
        return not self._elem

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        _, a, b = self._unify(rhs)
        return bool(a == b)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (
                    tuple(_named_terms(self._elem.numer, self._names)),
                    tuple(_named_terms(self._elem.denom, self._names)),
                )
            )
        return self._hash

    # inspection

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly(dict(_named_terms(self._elem.numer, self._names)))

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly(dict(_named_terms(self._elem.denom, self._names)))

    def variables(self) -> tuple[str, ...]:
        """Variables that actually occur."""
        used = set()
        for poly in (self._elem.numer, self._elem.denom):
            for monom in poly.keys():
                used.update(name for name, exp in zip(self._names, monom, strict=True) if exp)
        return order_variables(used) if used else ()

    def is_constant(self) -> bool:
        return self._elem.numer.is_ground and self._elem.denom.is_ground

    def is_polynomial(self) -> bool:
        """True when the denominator is a nonzero constant."""
        return bool(self._elem.denom.is_ground)

    def is_laurent(self) -> bool:
        return len(self._elem.denom) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        num = self._elem.numer
        den = self._elem.denom
        return _to_fraction(num.LC if num else QQ.zero) / _to_fraction(den.LC)

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        ((dmono, dcoeff),) = _named_terms(self._elem.denom, self._names)
        return self.num * (LaurentPoly({dmono: dcoeff}) ** -1)

    def monomial_exponents(self) -> tuple[Fraction, dict[str, int]] | None:
        """Coefficient and exponents if this is c * (monomial), else None."""
        if len(self._elem.numer) != 1 or len(self._elem.denom) != 1:
            return None
        ((nm, nc),) = _named_terms(self._elem.numer, self._names)
        ((dm, dc),) = _named_terms(self._elem.denom, self._names)
        exps = dict(nm)
        for name, exp in dm:
            exps[name] = exps.get(name, 0) - exp
        return nc / dc, {name: exp for name, exp in exps.items() if exp}

    # evaluation

    def evaluate(self, bindings: Mapping[str, Bindable]) -> RationalFunction:
        """Substitution homomorphism; unbound variables pass through."""
        relevant = {name: value for name, value in bindings.items() if name in self._names}
        if not relevant:
            return self
        if all(isinstance(value, int | Fraction) for value in relevant.values()):
            return self._evaluate_numeric(relevant, bindings)
        images = {
            name: value if isinstance(value, RationalFunction) else self._coerce(value)
            for name, value in relevant.items()
        }
        num = self._compose(self._elem.numer, images)
        den = self._compose(self._elem.denom, images)
        if den.is_zero():
            raise PoleAtPointError(
                f"{self} has a pole at {_describe(bindings)}", point=dict(bindings)
            )
        return num / den

    def _evaluate_numeric(
        self, relevant: Mapping[str, Any], bindings: Mapping[str, Bindable]
    ) -> RationalFunction:
        pairs = [(self._names.index(name), _qq(value)) for name, value in relevant.items()]
        num = self._elem.numer.subs(pairs)
        den = self._elem.denom.subs(pairs)
        if not den:
            raise PoleAtPointError(
                f"{self} has a pole at {_describe(bindings)}", point=dict(bindings)
            )
        field = _field(self._names)
        return RationalFunction(self._names, field.new(num, den)).compact()

    def _compose(self, poly: Any, images: Mapping[str, Any]) -> RationalFunction:
        total = RationalFunction.constant(0)
        powers: dict[tuple[str, int], RationalFunction] = {}
        for monom, coeff in poly.items():
            term = RationalFunction.constant(_to_fraction(coeff))
            rest: dict[str, int] = {}
            for name, exp in zip(self._names, monom, strict=True):
                if not exp:
                    continue
                if name in images:
                    key = (name, exp)
                    if key not in powers:
                        powers[key] = images[name] ** exp
                    term = term * powers[key]
                else:
                    rest[name] = exp
            if rest:
                term = term * RationalFunction.from_laurent(LaurentPoly.from_exponents(rest))
            total = total + term
        return total

    def compact(self) -> RationalFunction:
        """Drop declared auxiliaries that no longer occur."""
        used = order_variables({*BASE_VARIABLES, *self.variables()})
        if used == self._names:
            return self
        return RationalFunction(used, self._lift(used))

    # printing

    def __str__(self) -> str:
        return format_rational(self)

    def __repr__(self) -> str:
        return f"RationalFunction({format_rational(self)!r})"


def _describe(bindings: Mapping[str, Any]) -> str:
    return ", ".join(f"{name}={value}" for name, value in bindings.items())


def _is_atom(terms: list[tuple[Monomial, Fraction]]) -> bool:
    if len(terms) != 1:
        return False
    mono, coeff = terms[0]
    if not mono:
        return coeff.denominator == 1 and coeff > 0
    return coeff == 1 and len(mono) == 1


def format_rational(value: RationalFunction) -> str:
    names = value.names
    num_terms = _named_terms(value._elem.numer, names)
    den_terms = _named_terms(value._elem.denom, names)
    num_text = format_terms(num_terms, names)
    if den_terms == [((), Fraction(1))]:
        return num_text
    den_text = format_terms(den_terms, names)
    if len(num_terms) > 1:
        num_text = f"({num_text})"
    if not _is_atom(den_terms):
        den_text = f"({den_text})"
    return f"{num_text} / {den_text}"


def normalize(value: RationalFunction) -> RationalFunction:
    """Rebuild the cancelled form; idempotent."""
    field = _field(value.names)
    elem = value._elem
    if not elem.denom:
        raise ZeroDenominatorError("denominator is zero")
    return RationalFunction(value.names, field.new(elem.numer, elem.denom))


def from_fraction(num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
    return RationalFunction.from_fraction(num, den)


def evaluate(value: RationalFunction, bindings: Mapping[str, Bindable]) -> RationalFunction:
    return value.evaluate(bindings)


def variable(name: str) -> RationalFunction:
    return RationalFunction.variable(name)


def constant(value: Scalar) -> RationalFunction:
    return RationalFunction.constant(value)


def parse_rational(text: str) -> RationalFunction:
    return RationalFunction.parse(text)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[tuple[str, str]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN.match(text, pos)
            if match is None:
                break
            pos = match.end()
            if match.group(1):
                self.tokens.append(("int", match.group(1)))
            elif match.group(2):
                self.tokens.append(("name", match.group(2)))
            elif match.group(3):
                if match.group(3) not in "+-*/^()":
                    raise ParseError(f"unexpected character {match.group(3)!r} in {text!r}")
                self.tokens.append(("op", match.group(3)))
        self.pos = 0

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return token

    def _accept(self, op: str) -> bool:
        token = self._peek()
        if token == ("op", op):
            self.pos += 1
            return True
        return False

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ParseError("empty expression")
        value = self._expr()
        if self._peek() is not None:
            raise ParseError(f"trailing input at token {self._peek()!r} in {self.text!r}")
        return value

    def _expr(self) -> RationalFunction:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> RationalFunction:
        value = self._unary()
        while True:
            if self._accept("*"):
                value = value * self._unary()
            elif self._accept("/"):
                divisor = self._unary()
                if divisor.is_zero():
                    raise ZeroDenominatorError(f"division by zero in {self.text!r}")
                value = value / divisor
            else:
                return value

    def _unary(self) -> RationalFunction:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> RationalFunction:
        base = self._atom()
        if self._accept("^"):
            sign = 1
            if self._accept("-"):
                sign = -1
            else:
                self._accept("+")
            kind, text = self._take()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            base = base ** (sign * int(text))
        return base

    def _atom(self) -> RationalFunction:
        kind, text = self._take()
        if kind == "int":
            return RationalFunction.constant(int(text))
        if kind == "name":
            return RationalFunction.variable(text)
        if text == "(":
            value = self._expr()
            if not self._accept(")"):
                raise ParseError(f"missing ')' in {self.text!r}")
            return value
        raise ParseError(f"unexpected token {text!r} in {self.text!r}")


ZERO = RationalFunction.constant(0)
ONE = RationalFunction.constant(1)
Q = RationalFunction.variable("q")
T = RationalFunction.variable("t")
