"""Ordered tuples of disjoint cell sets and the statistics read off them.

A tuple L = (A_1, ..., A_r) of disjoint cell sets of a diagram D determines a
permutation sigma(D; L): the reading positions not used by L in decreasing
order, then those of A_1 in decreasing order, then A_2, and so on. Every cell
outside L belongs to the block A_0. For an attacking pair (u, v) the word
sigma^-1 has an inversion exactly when block(u) >= block(v), and a cell is a
descent exactly when its block is at least the block of the cell below it.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.matrices import Matrix, as_matrix
from macscifi.combinatorics.partitions import Cell
from macscifi.exceptions import CellNotInShapeError, FillingError, SizeMismatchError

from .diagram import Diagram, FilledDiagram, descents, inversions, longest_word, stat

_Q = LaurentPoly.variable("q")


@dataclass(frozen=True)
class CellTuple:
    diagram: Diagram
    blocks: tuple[frozenset[Cell], ...]

    def __post_init__(self) -> None:
        seen: set[Cell] = set()
        for block in self.blocks:
            for cell in block:
                if cell not in self.diagram:
                    raise CellNotInShapeError(f"cell {cell} is not in {self.diagram}")
                if cell in seen:
                    raise SizeMismatchError(f"cell {cell} appears in two blocks")
                seen.add(cell)

    @classmethod
    def of(cls, diagram: Diagram, blocks: Sequence[Sequence[Cell]]) -> CellTuple:
        return cls(diagram, tuple(frozenset(tuple(c) for c in block) for block in blocks))

    @cached_property
    def _block_of(self) -> dict[Cell, int]:
        return {cell: index for index, block in enumerate(self.blocks, start=1) for cell in block}

    def block(self, cell: Cell) -> int:
        """Index of the block holding ``cell``; 0 when no block does."""
        return self._block_of.get(cell, 0)

    @property
    def used(self) -> frozenset[Cell]:
        return frozenset(self._block_of)

    def type_matrix(self) -> Matrix:
        """type(D; L)_{i,j} = number of cells of A_i in row j."""
        return tuple(
            tuple(
                sum(1 for cell in block if cell[0] == row)
                for row in range(1, self.diagram.rows + 1)
            )
            for block in self.blocks
        )

    def sigma(self) -> tuple[int, ...]:
        position = self.diagram.position
        unused = [position[c] for c in self.diagram.cells() if c not in self._block_of]
        out = sorted(unused, reverse=True)
        for block in self.blocks:
            out.extend(sorted((position[c] for c in block), reverse=True))
        return tuple(out)

    def sigma_inverse(self) -> tuple[int, ...]:
        word = [0] * self.diagram.size
        for index, value in enumerate(self.sigma(), start=1):
            word[value - 1] = index
        return tuple(word)

    def c_vector(self) -> tuple[int, ...]:
        """Number of used cells in each column."""
        counts = [0] * len(self.diagram.columns)
        for _, col in self._block_of:
            counts[col - 1] += 1
        return tuple(counts)

    def gamma_vector(self) -> tuple[int, ...]:
        """Per row below the top: used cells whose upper neighbour is no complementary descent."""
        counts = [0] * max(self.diagram.rows - 1, 0)
        for (row, col), index in self._block_of.items():
            if row > len(counts):
                continue
            above = (row + 1, col)
            if above not in self.diagram or index <= self.block(above):
                counts[row - 1] += 1
        return tuple(counts)

    def is_reduced(self) -> bool:
        return not any(self.gamma_vector())

    def is_packed(self) -> bool:
        """Used columns form a prefix of the columns."""
        c = self.c_vector()
        filled = [value > 0 for value in c]
        return filled == sorted(filled, reverse=True)

    @property
    def length(self) -> int:
        """l(L), the number of columns holding a used cell."""
        return sum(1 for value in self.c_vector() if value)

    def restrict(self, sub: Diagram) -> CellTuple:
        kept = tuple(frozenset(c for c in block if c in sub) for block in self.blocks)
        return CellTuple(sub, kept)

    def to_json(self) -> list[list[list[int]]]:
        return [[list(cell) for cell in sorted(block)] for block in self.blocks]


def _disjoint_choices(
    cells: Sequence[Cell], sizes: Sequence[int]
) -> Iterator[tuple[tuple[Cell, ...], ...]]:
    if not sizes:
        yield ()
        return
    head, rest = sizes[0], sizes[1:]
    for chosen in combinations(cells, head):
        remaining = [c for c in cells if c not in chosen]
        for tail in _disjoint_choices(remaining, rest):
            yield (chosen, *tail)


def op_tuples(diagram: Diagram, alpha: Sequence[int]) -> Iterator[CellTuple]:
    """OP(D; alpha): tuples of disjoint cell sets with |A_i| = alpha_i."""
    if sum(alpha) > diagram.size:
        raise SizeMismatchError(f"composition {tuple(alpha)} is larger than |D| = {diagram.size}")
    for choice in _disjoint_choices(diagram.cells(), tuple(alpha)):
        yield CellTuple(diagram, tuple(frozenset(block) for block in choice))


def op_tuples_of_type(diagram: Diagram, matrix: Sequence[Sequence[int]]) -> Iterator[CellTuple]:
    """OP(D; M): tuples whose type matrix is M, padded with zero columns."""
    m = as_matrix(matrix)
    r = len(m)
    width = len(m[0]) if m else 0
    if any(m[i][j] for i in range(r) for j in range(diagram.rows, width)):
        return
    per_row = []
    for row in range(1, diagram.rows + 1):
        sizes = tuple(m[i][row - 1] if row - 1 < width else 0 for i in range(r))
        per_row.append(list(_disjoint_choices(diagram.row_cells(row), sizes)))
    for combo in product(*per_row):
        blocks = [frozenset(c for row_choice in combo for c in row_choice[i]) for i in range(r)]
        yield CellTuple(diagram, tuple(blocks))


def laurent_filling(filled: FilledDiagram) -> dict[Cell, LaurentPoly]:
    out = {}
    for cell, value in filled.filling.items():
        if not value.is_laurent():
            raise FillingError(f"filling at {cell} is not a Laurent polynomial: {value}")
        out[cell] = value.to_laurent()
    return out


def stat_of_tuple(filled: FilledDiagram, cells: CellTuple) -> RationalFunction:
    """stat_(D,f)(sigma(D; L)^-1), by building the word."""
    return stat(filled, cells.sigma_inverse())


def stat_of_tuple_laurent(
    diagram: Diagram, fill: dict[Cell, LaurentPoly], cells: CellTuple
) -> LaurentPoly:
    word = cells.sigma_inverse()
    value = _Q ** inversions(diagram, word)
    for cell in descents(diagram, word):
        value = value * fill[cell]
    return value


def inv_bar_count(cells: CellTuple) -> int:
    """Attacking pairs (u, v) with block(u) < block(v)."""
    return sum(1 for u, v in cells.diagram.attacking_pairs if cells.block(u) < cells.block(v))


def des_bar_cells(cells: CellTuple) -> list[Cell]:
    """Non-bottom cells whose block is smaller than the block of the cell below."""
    return [
        (i, j)
        for i, j in cells.diagram.non_bottom_cells
        if cells.block((i, j)) < cells.block((i - 1, j))
    ]


def stat_bar(filled: FilledDiagram, cells: CellTuple) -> RationalFunction:
    value = RationalFunction.variable("q") ** inv_bar_count(cells)
    for cell in des_bar_cells(cells):
        value = value * filled.filling[cell]
    return value


def stat_bar_laurent(fill: dict[Cell, LaurentPoly], cells: CellTuple) -> LaurentPoly:
    value = _Q ** inv_bar_count(cells)
    for cell in des_bar_cells(cells):
        value = value * fill[cell]
    return value


def longest_stat_laurent(diagram: Diagram, fill: dict[Cell, LaurentPoly]) -> LaurentPoly:
    word = longest_word(diagram.size)
    value = _Q ** inversions(diagram, word)
    for cell in descents(diagram, word):
        value = value * fill[cell]
    return value


def pinv_exponent(cells: CellTuple) -> int:
    """Attacking pairs (u, v) with u in A_j and v in A_i for 1 <= i <= j."""
    return sum(
        1
        for u, v in cells.diagram.attacking_pairs
        if cells.block(v) >= 1 and cells.block(u) >= cells.block(v)
    )


def pinv(cells: CellTuple) -> LaurentPoly:
    return _Q ** pinv_exponent(cells)


def type_sum(
    filled: FilledDiagram, matrix: Sequence[Sequence[int]], route: str = "sigma"
) -> LaurentPoly:
    """Sum of stat(sigma(D; L)^-1) over L in OP(D; M).

    ``route`` is "sigma" (build each word) or "complement" (stat(w_0) / stat_bar).
    """
    fill = laurent_filling(filled)
    diagram = filled.diagram
    total = LaurentPoly()
    if route == "sigma":
        for cells in op_tuples_of_type(diagram, matrix):
            total = total + stat_of_tuple_laurent(diagram, fill, cells)
        return total
    if route != "complement":
        raise ValueError(f"unknown route {route!r}")
    top = longest_stat_laurent(diagram, fill)
    for cells in op_tuples_of_type(diagram, matrix):
        total = total + top * stat_bar_laurent(fill, cells) ** -1
    return total


def inverse_stat_bar_sum(
    filled: FilledDiagram, matrix: Sequence[Sequence[int]], reduced: bool = False
) -> LaurentPoly:
    """Sum of 1 / stat_bar(L) over OP(D; M), optionally over reduced L only."""
    fill = laurent_filling(filled)
    total = LaurentPoly()
    for cells in op_tuples_of_type(filled.diagram, matrix):
        if reduced and not cells.is_reduced():
            continue
        total = total + stat_bar_laurent(fill, cells) ** -1
    return total
