"""Sparse multivariate Laurent polynomials over the rationals.

A monomial is a tuple of ``(name, exponent)`` pairs, sorted by variable order
with zero exponents dropped, so two equal monomials always compare equal no
matter which variables the surrounding expression declares. Coefficients are
``fractions.Fraction``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Union

from macscifi.exceptions import PoleAtPointError

if TYPE_CHECKING:
    from .rational import RationalFunction

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]

_INDEXED = re.compile(r"^([A-Za-z]+)(\d+)$")
BASE_VARIABLES = ("q", "t")


@lru_cache(maxsize=4096)
def variable_key(name: str) -> tuple[int, str, int, str]:
    """Sort key putting q, t first, then indexed auxiliaries, then other names."""
    if name in BASE_VARIABLES:
        return (0, "", BASE_VARIABLES.index(name), name)
    match = _INDEXED.match(name)
    if match:
        return (1, match.group(1), int(match.group(2)), name)
    return (2, name, 0, name)


def order_variables(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=variable_key))


def _make_monomial(exps: Mapping[str, int]) -> Monomial:
    return tuple(
        (name, exp) for name, exp in sorted(exps.items(), key=lambda kv: variable_key(kv[0])) if exp
    )


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, exp in b:
        exps[name] = exps.get(name, 0) + exp
    return _make_monomial(exps)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        cleaned: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                cleaned[mono] = value
        self._terms = cleaned
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> LaurentPoly:
        return cls({(): value})

    @classmethod
    def variable(cls, name: str) -> LaurentPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **exps: int) -> LaurentPoly:
        return cls({_make_monomial(exps): coeff})

    @classmethod
    def from_exponents(cls, exps: Mapping[str, int], coeff: Scalar = 1) -> LaurentPoly:
        return cls({_make_monomial(exps): coeff})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    @property
    def varset(self) -> tuple[str, ...]:
        names = {name for mono in self._terms for name, _ in mono}
        return order_variables({*BASE_VARIABLES, *names})

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(other: object) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int | Fraction):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            value = out.get(mono, Fraction(0)) + coeff
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                mono = _mul_monomials(m1, m2)
                value = out.get(mono, Fraction(0)) + c1 * c2
                if value:
                    out[mono] = value
                else:
                    out.pop(mono, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((mono, coeff),) = self._terms.items()
            inv = tuple((name, -exp) for name, exp in mono)
            return LaurentPoly._raw({inv: 1 / coeff}) ** (-exponent)
        result = LaurentPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self) -> str:
        return format_laurent(self)

    def substitute_power(self, k: int) -> LaurentPoly:
        """Replace every variable v by v^k."""
        return LaurentPoly._raw(
            {tuple((name, exp * k) for name, exp in mono): c for mono, c in self._terms.items()}
        )

    def substitute(self, bindings: Mapping[str, LaurentPoly]) -> LaurentPoly:
        """Substitute monomials for variables; unbound variables pass through."""
        out = LaurentPoly()
        for mono, coeff in self._terms.items():
            term = LaurentPoly.constant(coeff)
            rest: dict[str, int] = {}
            for name, exp in mono:
                if name in bindings:
                    term = term * bindings[name] ** exp
                else:
                    rest[name] = exp
            out = out + term * LaurentPoly.from_exponents(rest)
        return out

    def evaluate(self, bindings: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at numeric values for every variable present."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for name, exp in mono:
                if name not in bindings:
                    raise KeyError(f"variable {name} is unbound")
                base = Fraction(bindings[name])
                if exp < 0 and base == 0:
                    raise PoleAtPointError(
                        f"{name}^{exp} has a pole at {name}=0", point=dict(bindings)
                    )
                value *= base**exp
            total += value
        return total

    def exponents(self) -> dict[str, int]:
        """Exponents of a monomial."""
        if not self.is_monomial():
            raise ValueError("not a monomial")
        ((mono, _),) = self._terms.items()
        return dict(mono)

    def degree_in(self, name: str) -> tuple[int, int]:
        """Lowest and highest exponent of ``name``."""
        exps = [dict(mono).get(name, 0) for mono in self._terms] or [0]
        return min(exps), max(exps)

    def to_rational(self) -> RationalFunction:
        from .rational import RationalFunction

        return RationalFunction.from_laurent(self)


def _sort_key(mono: Monomial, names: tuple[str, ...]) -> tuple[int, ...]:
    exps = dict(mono)
    return tuple(exps.get(name, 0) for name in names)


def format_monomial(mono: Monomial) -> str:
    parts = []
    for name, exp in mono:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def format_terms(terms: Iterable[tuple[Monomial, Fraction]], names: tuple[str, ...]) -> str:
    """Render terms by descending lexicographic exponent vector."""
    ordered = sorted(terms, key=lambda mc: _sort_key(mc[0], names), reverse=True)
    if not ordered:
        return "0"
    chunks: list[str] = []
    for idx, (mono, coeff) in enumerate(ordered):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = format_monomial(mono)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if idx == 0:
            chunks.append(f"-{text}" if sign == "-" else text)
        else:
            chunks.append(f" {sign} {text}")
    return "".join(chunks)


def format_laurent(poly: LaurentPoly) -> str:
    return format_terms(poly.terms.items(), poly.varset)


Q = LaurentPoly.variable("q")
T = LaurentPoly.variable("t")
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
