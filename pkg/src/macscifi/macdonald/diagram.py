"""Diagrams with interval columns, fillings, and the inv/maj statistic.

A diagram is a sequence of columns, each an interval ``[lo, hi]`` of rows.
The lowest cell of each column is its bottom cell; a filling assigns a rational
function to every other cell. Cells are read row by row from the top row down,
left to right within a row; that reading order is N_D.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations

import structlog

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import Cell, Composition, Partition, arm, leg
from macscifi.exceptions import FillingError, IndexOutOfRangeError, SizeMismatchError
from macscifi.symmetric.qsym import QSymExpansion

logger = structlog.get_logger(__name__)

Interval = tuple[int, int]

_Q = RationalFunction.variable("q")


@dataclass(frozen=True)
class Diagram:
    columns: tuple[Interval, ...]

    def __post_init__(self) -> None:
        for lo, hi in self.columns:
            if lo < 1 or hi < lo:
                raise IndexOutOfRangeError(f"column interval [{lo}, {hi}] is not valid")

    @classmethod
    def from_intervals(cls, columns: Iterable[Sequence[int]]) -> Diagram:
        out = []
        for column in columns:
            if len(column) == 1:
                out.append((1, int(column[0])))
            else:
                lo, hi = column
                out.append((int(lo), int(hi)))
        return cls(tuple(out))

    @classmethod
    def from_partition(cls, mu: Partition) -> Diagram:
        return cls(tuple((1, height) for height in mu.conjugate()))

    @property
    def size(self) -> int:
        return sum(hi - lo + 1 for lo, hi in self.columns)

    @property
    def rows(self) -> int:
        return max((hi for _, hi in self.columns), default=0)

    @cached_property
    def reading_order(self) -> tuple[Cell, ...]:
        return tuple(
            (row, col)
            for row in range(self.rows, 0, -1)
            for col, (lo, hi) in enumerate(self.columns, start=1)
            if lo <= row <= hi
        )

    @cached_property
    def position(self) -> dict[Cell, int]:
        """N_D, 1-based."""
        return {cell: index for index, cell in enumerate(self.reading_order, start=1)}

    def cells(self) -> tuple[Cell, ...]:
        return self.reading_order

    def __contains__(self, cell: object) -> bool:
        return cell in self.position

    def row_cells(self, row: int) -> tuple[Cell, ...]:
        return tuple(cell for cell in self.reading_order if cell[0] == row)

    def is_bottom(self, cell: Cell) -> bool:
        row, col = cell
        return self.columns[col - 1][0] == row

    @cached_property
    def non_bottom_cells(self) -> tuple[Cell, ...]:
        return tuple(cell for cell in self.reading_order if not self.is_bottom(cell))

    @cached_property
    def attacking_pairs(self) -> tuple[tuple[Cell, Cell], ...]:
        """Pairs (u, v) in the same row with u left of v, or u one row above v and right of it."""
        pairs = []
        for u in self.reading_order:
            for v in self.reading_order:
                (i, j), (i2, j2) = u, v
                if (i == i2 and j < j2) or (i == i2 + 1 and j > j2):
                    pairs.append((u, v))
        return tuple(pairs)

    @cached_property
    def _attacking_positions(self) -> tuple[tuple[int, int], ...]:
        pos = self.position
        return tuple((pos[u] - 1, pos[v] - 1) for u, v in self.attacking_pairs)

    @cached_property
    def _vertical_positions(self) -> tuple[tuple[int, int], ...]:
        pos = self.position
        return tuple((pos[(i, j)] - 1, pos[(i - 1, j)] - 1) for i, j in self.non_bottom_cells)

    def restrict(self, rows: int | None = None, cols: int | None = None) -> Diagram:
        """Sub-diagram on the first ``rows`` rows and first ``cols`` columns."""
        top = self.rows if rows is None else rows
        kept = self.columns if cols is None else self.columns[:cols]
        out = tuple((lo, min(hi, top)) for lo, hi in kept if lo <= top)
        return Diagram(out)

    def to_json(self) -> list[list[int]]:
        return [[lo, hi] for lo, hi in self.columns]

    def __str__(self) -> str:
        return "[" + ", ".join(f"[{lo},{hi}]" for lo, hi in self.columns) + "]"


@dataclass(frozen=True)
class FilledDiagram:
    diagram: Diagram
    filling: Mapping[Cell, RationalFunction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        expected = set(self.diagram.non_bottom_cells)
        if set(self.filling) != expected:
            missing = sorted(expected - set(self.filling))
            extra = sorted(set(self.filling) - expected)
            raise FillingError(
                "filling must cover exactly the non-bottom cells"
                f" (missing {missing}, extra {extra})"
            )

    @classmethod
    def standard(cls, mu: Partition) -> FilledDiagram:
        """f(u) = q^(-arm) t^(leg+1) on every cell above the first row."""
        diagram = Diagram.from_partition(mu)
        filling = {
            (i, j): RationalFunction.from_laurent(
                LaurentPoly.monomial(q=-arm(mu, (i, j)), t=leg(mu, (i, j)) + 1)
            )
            for i, j in diagram.non_bottom_cells
        }
        return cls(diagram, filling)

    @classmethod
    def constant(cls, diagram: Diagram, value: RationalFunction | int) -> FilledDiagram:
        coeff = value if isinstance(value, RationalFunction) else RationalFunction.constant(value)
        return cls(diagram, {cell: coeff for cell in diagram.non_bottom_cells})

    @property
    def size(self) -> int:
        return self.diagram.size

    def __getitem__(self, cell: Cell) -> RationalFunction:
        return self.filling[cell]

    def restrict(self, rows: int | None = None, cols: int | None = None) -> FilledDiagram:
        sub = self.diagram.restrict(rows, cols)
        return FilledDiagram(sub, {cell: self.filling[cell] for cell in sub.non_bottom_cells})

    def substitute(
        self, bindings: Mapping[str, RationalFunction | int | Fraction]
    ) -> FilledDiagram:
        return FilledDiagram(
            self.diagram, {cell: value.evaluate(bindings) for cell, value in self.filling.items()}
        )

    def to_json(self) -> dict[str, object]:
        return {
            "columns": self.diagram.to_json(),
            "filling": {f"{i},{j}": str(value) for (i, j), value in sorted(self.filling.items())},
        }


def inversions(diagram: Diagram, word: Sequence[int]) -> int:
    return sum(1 for a, b in diagram._attacking_positions if word[a] > word[b])


def descents(diagram: Diagram, word: Sequence[int]) -> list[Cell]:
    cells = diagram.non_bottom_cells
    verticals = diagram._vertical_positions
    return [cell for cell, (up, low) in zip(cells, verticals, strict=True) if word[up] > word[low]]


def _check_word(diagram: Diagram, word: Sequence[int]) -> None:
    if sorted(word) != list(range(1, diagram.size + 1)):
        raise SizeMismatchError(
            f"word {list(word)} is not a permutation of [{diagram.size}]"
        )


def stat(filled: FilledDiagram, word: Sequence[int]) -> RationalFunction:
    """inv_D(w) * maj_(D,f)(w), where w_{N(u)} is the letter at cell u."""
    _check_word(filled.diagram, word)
    value = _Q ** inversions(filled.diagram, word)
    for cell in descents(filled.diagram, word):
        value = value * filled.filling[cell]
    return value


def longest_word(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _ides_mask(word: Sequence[int]) -> int:
    position = [0] * (len(word) + 1)
    for index, value in enumerate(word):
        position[value] = index
    mask = 0
    for i in range(1, len(word)):
        if position[i + 1] < position[i]:
            mask |= 1 << i
    return mask


def _tally(diagram: Diagram, words: Iterator[tuple[int, ...]]) -> Counter[tuple[int, int, int]]:
    """Count words by (iDes mask, #inversions, descent mask)."""
    pairs = diagram._attacking_positions
    verticals = diagram._vertical_positions
    tally: Counter[tuple[int, int, int]] = Counter()
    for word in words:
        inv = 0
        for a, b in pairs:
            if word[a] > word[b]:
                inv += 1
        des = 0
        for bit, (up, low) in enumerate(verticals):
            if word[up] > word[low]:
                des |= 1 << bit
        tally[(_ides_mask(word), inv, des)] += 1
    return tally


def _composition_of_mask(mask: int, n: int) -> Composition:
    return Composition.from_set((i for i in range(1, n) if mask >> i & 1), n)


def _monomial_filling(filled: FilledDiagram) -> list[tuple[Fraction, dict[str, int]]] | None:
    out = []
    for cell in filled.diagram.non_bottom_cells:
        mono = filled.filling[cell].monomial_exponents()
        if mono is None:
            return None
        out.append(mono)
    return out


def macdonald_terms(filled: FilledDiagram) -> dict[Composition, RationalFunction]:
    """F-coefficients of the generalized Macdonald polynomial, by full enumeration of S_n."""
    n = filled.size
    tally = _tally(filled.diagram, permutations(range(1, n + 1)))
    monomials = _monomial_filling(filled)
    out: dict[Composition, RationalFunction] = {}
    if monomials is not None:
        sums: dict[int, dict[tuple[tuple[str, int], ...], Fraction]] = {}
        weights: dict[int, tuple[Fraction, dict[str, int]]] = {}
        for (ides, inv, des), count in tally.items():
            if des not in weights:
                coeff, exps = Fraction(1), {}
                for bit, (c, e) in enumerate(monomials):
                    if des >> bit & 1:
                        coeff *= c
                        for name, exp in e.items():
                            exps[name] = exps.get(name, 0) + exp
                weights[des] = (coeff, exps)
            coeff, exps = weights[des]
            key = dict(exps)
            key["q"] = key.get("q", 0) + inv
            mono = LaurentPoly.from_exponents(key)
            ((monomial, _),) = mono.terms.items()
            bucket = sums.setdefault(ides, {})
            bucket[monomial] = bucket.get(monomial, Fraction(0)) + coeff * count
        for ides, terms in sums.items():
            poly = LaurentPoly(terms)
            if not poly.is_zero():
                out[_composition_of_mask(ides, n)] = RationalFunction.from_laurent(poly)
        return out
    cells = filled.diagram.non_bottom_cells
    products: dict[int, RationalFunction] = {}
    for (ides, inv, des), count in tally.items():
        if des not in products:
            value = RationalFunction.constant(1)
            for bit, cell in enumerate(cells):
                if des >> bit & 1:
                    value = value * filled.filling[cell]
            products[des] = value
        key = _composition_of_mask(ides, n)
        term = products[des] * (_Q**inv) * count
        out[key] = out[key] + term if key in out else term
    return {k: v for k, v in out.items() if not v.is_zero()}


def generalized_macdonald(filled: FilledDiagram) -> QSymExpansion:
    """H~_(D,f) = sum over w in S_n of stat(w) F_iDes(w)."""
    terms = macdonald_terms(filled)
    logger.debug("generalized_macdonald_built", diagram=str(filled.diagram), terms=len(terms))
    return QSymExpansion("F", filled.size, terms)
