"""Nonnegative integer matrices, Fibonacci matrices and lightning bolt weights.

A matrix is a tuple of rows. ``M[i-1][j-1]`` is the entry M_{i,j}; rows index
the blocks of a composition beta and columns index bounce blocks (or rows of a
diagram). Following the usual convention here, ``csum`` is the vector of row
sums and ``rsum`` the vector of column sums.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import product

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.qanalog import q_binomial, q_multinomial
from macscifi.algebra.rational import RationalFunction
from macscifi.exceptions import IndexOutOfRangeError

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    matrix = tuple(tuple(int(x) for x in row) for row in rows)
    if matrix and any(len(row) != len(matrix[0]) for row in matrix):
        raise ValueError("matrix rows must have equal length")
    return matrix


def shape(matrix: Matrix) -> tuple[int, int]:
    return len(matrix), len(matrix[0]) if matrix else 0


def csum(matrix: Matrix) -> tuple[int, ...]:
    """Row sum vector."""
    return tuple(sum(row) for row in matrix)


def rsum(matrix: Matrix) -> tuple[int, ...]:
    """Column sum vector."""
    _, cols = shape(matrix)
    return tuple(sum(row[j] for row in matrix) for j in range(cols))


def total(matrix: Matrix) -> int:
    return sum(sum(row) for row in matrix)


def subtract(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x - y for x, y in zip(ra, rb, strict=True)) for ra, rb in zip(a, b, strict=True)
    )


def _vectors(target: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        if target == 0:
            yield ()
        return
    if length == 1:
        yield (target,)
        return
    for first in range(target + 1):
        for rest in _vectors(target - first, length - 1):
            yield (first, *rest)


def matrices_with_row_sums(row_sums: Sequence[int], cols: int) -> Iterator[Matrix]:
    """All nonnegative matrices with ``cols`` columns and the given row sums."""
    choices = [list(_vectors(s, cols)) for s in row_sums]
    for rows in product(*choices):
        yield tuple(rows)


def matrices_with_margins(row_sums: Sequence[int], col_sums: Sequence[int]) -> Iterator[Matrix]:
    """All nonnegative matrices with prescribed row and column sums."""
    if sum(row_sums) != sum(col_sums):
        return
    remaining = list(col_sums)

    def fill(i: int, acc: tuple[tuple[int, ...], ...]) -> Iterator[Matrix]:
        if i == len(row_sums):
            if not any(remaining):
                yield acc
            return
        for row in _vectors(row_sums[i], len(col_sums)):
            if any(x > r for x, r in zip(row, remaining, strict=True)):
                continue
            for j, x in enumerate(row):
                remaining[j] -= x
            yield from fill(i + 1, (*acc, row))
            for j, x in enumerate(row):
                remaining[j] += x

    yield from fill(0, ())


@lru_cache(maxsize=None)
def fibonacci_matrices(rows: int, cols: int) -> tuple[Matrix, ...]:
    """Fib_{r,l}: 0-1 matrices with a zero first column, at most one 1 per
    column, and E_{a,j} = E_{b,j+1} = 1 only when a > b."""
    if rows < 1 or cols < 1:
        raise IndexOutOfRangeError(f"Fibonacci matrices need positive size, got {rows}x{cols}")
    # each column is either empty (0) or holds its 1 in some row 1..rows
    columns: list[list[int]] = [[0]]
    for _ in range(1, cols):
        grown = []
        for col in columns:
            last = col[-1]
            for a in range(rows + 1):
                if a and last and not last > a:
                    continue
                grown.append([*col, a])
        columns = grown
    return tuple(
        tuple(tuple(int(col[j] == i) for j in range(cols)) for i in range(1, rows + 1))
        for col in columns
    )


def llb_set(i: int, j: int, rows: int) -> frozenset[tuple[int, int]]:
    """LLB(i,j) = {(a, j-1) : a <= i} together with {(a, j) : a >= i}."""
    return frozenset({(a, j - 1) for a in range(1, i + 1)} | {(a, j) for a in range(i, rows + 1)})


def lb_at(matrix: Matrix, cell: tuple[int, int]) -> int:
    """LB(M;(i,j)), the sum of M over the lightning bolt set of (i,j)."""
    rows, cols = shape(matrix)
    i, j = cell
    if not (1 <= i <= rows and 2 <= j <= cols):
        raise IndexOutOfRangeError(f"cell {cell} outside 1..{rows} x 2..{cols}")
    return sum(matrix[a - 1][b - 1] for a, b in llb_set(i, j, rows))


def lb_at_set(matrix: Matrix, pattern: Matrix) -> int:
    """Sum of LB(M;(i,j)) over the cells where ``pattern`` has a 1."""
    return sum(
        lb_at(matrix, (i, j))
        for i, row in enumerate(pattern, start=1)
        for j, e in enumerate(row, start=1)
        if e
    )


def _first_column(matrix: Matrix) -> LaurentPoly | None:
    column = [row[0] for row in matrix]
    if any(x < 0 for x in column):
        return None
    return q_multinomial(tuple(column))


def lb_laurent(matrix: Matrix) -> LaurentPoly:
    """LB(M) as a polynomial in q."""
    rows, cols = shape(matrix)
    if rows == 0:
        return LaurentPoly.constant(1)
    value = _first_column(matrix)
    if value is None:
        return LaurentPoly.constant(0)
    for i in range(1, rows + 1):
        for j in range(2, cols + 1):
            value = value * q_binomial(lb_at(matrix, (i, j)) - 1, matrix[i - 1][j - 1])
            if value.is_zero():
                return value
    return value


def lb_tilde_laurent(matrix: Matrix) -> LaurentPoly:
    """The variant of LB(M) using binom(LB(M;(i,j)), M_ij); zero if an entry is negative."""
    rows, cols = shape(matrix)
    if rows == 0:
        return LaurentPoly.constant(1)
    value = _first_column(matrix)
    if value is None:
        return LaurentPoly.constant(0)
    for i in range(1, rows + 1):
        for j in range(2, cols + 1):
            value = value * q_binomial(lb_at(matrix, (i, j)), matrix[i - 1][j - 1])
            if value.is_zero():
                return value
    return value


def lb(matrix: Matrix) -> RationalFunction:
    return RationalFunction.from_laurent(lb_laurent(matrix))


def lb_tilde(matrix: Matrix) -> RationalFunction:
    return RationalFunction.from_laurent(lb_tilde_laurent(matrix))


def binomial_pairs_exponent(matrix: Matrix) -> int:
    """Sum of binom(M_ij, 2) over all entries."""
    return sum(x * (x - 1) // 2 for row in matrix for x in row)


def inclusion_exclusion_lb(matrix: Matrix) -> LaurentPoly:
    """Recover LB(M) from the tilde variant by a signed sum over Fibonacci matrices."""
    rows, cols = shape(matrix)
    result = LaurentPoly.constant(0)
    for pattern in fibonacci_matrices(rows, cols):
        ones = total(pattern)
        shift = lb_at_set(matrix, pattern) - sum(
            matrix[i][j] for i in range(rows) for j in range(cols) if pattern[i][j]
        )
        term = LaurentPoly.monomial(q=shift) * lb_tilde_laurent(subtract(matrix, pattern))
        result = result + (-term if ones % 2 else term)
    return result


def matrices_of_total(rows: int, cols: int, value: int) -> Iterator[Matrix]:
    """All nonnegative rows x cols matrices whose entries sum to ``value``."""
    for flat in _vectors(value, rows * cols):
        yield tuple(tuple(flat[i * cols : (i + 1) * cols]) for i in range(rows))
