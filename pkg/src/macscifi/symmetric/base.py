"""Finite linear combinations of basis elements with rational-function coefficients."""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Generic, TypeVar

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction, format_rational
from macscifi.exceptions import DegreeMismatchError, ExpansionError

K = TypeVar("K", bound=tuple[int, ...])

Coefficient = RationalFunction | LaurentPoly | int | Fraction


def as_coefficient(value: Coefficient) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFunction.from_laurent(value)
    return RationalFunction.constant(value)


def format_coefficient(coeff: RationalFunction, label: str) -> str:
    """Render ``coeff * label`` with the sign pulled out front."""
    if coeff.is_constant():
        value = coeff.to_fraction()
        sign = "-" if value < 0 else "+"
        magnitude = abs(value)
        if magnitude == 1:
            return f"{sign} {label}"
        joiner = "" if magnitude.denominator == 1 else "*"
        return f"{sign} {magnitude}{joiner}{label}"
    text = format_rational(coeff)
    if " " in text:
        return f"+ ({text})*{label}"
    if text.startswith("-"):
        return f"- {text[1:]}*{label}"
    return f"+ {text}*{label}"


class Expansion(Generic[K]):
    """Base class for expansions indexed by compositions or partitions.

    Zero coefficients are never stored. Subclasses fix the key type and the
    set of allowed basis tags.
    """

    __slots__ = ("basis", "degree", "_terms")

    BASES: tuple[str, ...] = ()

    def __init__(self, basis: str, degree: int, terms: Mapping[K, Coefficient] | None = None):
        if basis not in self.BASES:
            raise ExpansionError(f"unknown basis {basis!r}; expected one of {self.BASES}")
        self.basis = basis
        self.degree = degree
        cleaned: dict[K, RationalFunction] = {}
        for key, value in (terms or {}).items():
            if sum(key) != degree:
                raise DegreeMismatchError(f"index {tuple(key)} does not have size {degree}")
            coeff = as_coefficient(value)
            if coeff:
                cleaned[self._key(key)] = coeff
        self._terms = cleaned

    @classmethod
    def _key(cls, key: tuple[int, ...]) -> K:
        raise NotImplementedError

    @classmethod
    def zero(cls, basis: str, degree: int) -> Self:
        return cls(basis, degree)

    @classmethod
    def basis_element(cls, basis: str, key: tuple[int, ...], coeff: Coefficient = 1) -> Self:
        return cls(basis, sum(key), {cls._key(key): coeff})

    @property
    def terms(self) -> Mapping[K, RationalFunction]:
        return self._terms

    def coefficient(self, key: tuple[int, ...]) -> RationalFunction:
        found = self._terms.get(self._key(key))
        return found if found is not None else RationalFunction.constant(0)

    def items(self) -> Iterator[tuple[K, RationalFunction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: Expansion[Any]) -> None:
        if type(other) is not type(self):
            raise ExpansionError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other.basis != self.basis:
            raise ExpansionError(f"basis mismatch: {self.basis} vs {other.basis}")
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: Self) -> Self:
        self._check_compatible(other)
        merged: dict[K, RationalFunction] = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged[key] + coeff if key in merged else coeff
        return type(self)(self.basis, self.degree, merged)

    def __neg__(self) -> Self:
        return type(self)(self.basis, self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def scale(self, factor: Coefficient) -> Self:
        value = as_coefficient(factor)
        return type(self)(self.basis, self.degree, {k: c * value for k, c in self._terms.items()})

    def __mul__(self, factor: Coefficient) -> Self:
        return self.scale(factor)

    __rmul__ = __mul__

    def map_coefficients(self, fn: Callable[[RationalFunction], RationalFunction]) -> Self:
        return type(self)(self.basis, self.degree, {k: fn(c) for k, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        assert isinstance(other, Expansion)
        return (
            self.basis == other.basis
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.basis, self.degree, frozenset(self._terms.items())))

    def sorted_keys(self) -> list[K]:
        return sorted(self._terms)

    def _label(self, key: K) -> str:
        return f"{self.basis}[{','.join(str(p) for p in key)}]"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = [
            format_coefficient(self._terms[key], self._label(key)) for key in self.sorted_keys()
        ]
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.basis!r}, {self.degree}, {str(self)!r})"
