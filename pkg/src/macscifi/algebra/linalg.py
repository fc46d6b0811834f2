"""Exact linear solving over a field by fraction-free (Bareiss) elimination.

Entries may be ``Fraction`` or ``RationalFunction``; anything supporting
``+ - * /`` and truth testing for zero works.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any, TypeVar

import structlog

from macscifi.exceptions import SingularMatrixError

logger = structlog.get_logger(__name__)

E = TypeVar("E")


def _bareiss(matrix: list[list[Any]], size: int) -> None:
    prev: Any = 1
    for k in range(size):
        for pivot_row in range(k, size):
            if matrix[pivot_row][k]:
                break
        else:
            logger.warning("solve_linear_pivot_missing", column=k, size=size)
            raise SingularMatrixError(f"no pivot in column {k}")
        if pivot_row != k:
            matrix[k], matrix[pivot_row] = matrix[pivot_row], matrix[k]
        pivot = matrix[k][k]
        row_k = matrix[k]
        for i in range(k + 1, size):
            row_i = matrix[i]
            lead = row_i[k]
            for j in range(k + 1, len(row_i)):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) / prev
            row_i[k] = lead * 0
        prev = pivot


def _back_substitute(matrix: list[list[Any]], size: int, width: int) -> list[list[Any]]:
    solutions: list[list[Any]] = []
    for col in range(size, width):
        sol: list[Any] = [None] * size
        for r in range(size - 1, -1, -1):
            s = matrix[r][col]
            for c in range(r + 1, size):
                s = s - matrix[r][c] * sol[c]
            sol[r] = s / matrix[r][r]
        solutions.append(sol)
    return solutions


def _check_square(a: Sequence[Sequence[Any]]) -> int:
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("matrix must be square")
    return size


def solve_linear(a: Sequence[Sequence[E]], b: Sequence[E], verify: bool = True) -> list[E]:
    """Solve ``a x = b`` exactly.

    Raises:
        SingularMatrixError: if elimination finds no pivot, or the residual
            of the back-substituted solution is not zero.
    """
    size = _check_square(a)
    if len(b) != size:
        raise ValueError("right-hand side has the wrong length")
    if size == 0:
        return []
    matrix = [list(row) + [b[i]] for i, row in enumerate(a)]
    _bareiss(matrix, size)
    (x,) = _back_substitute(matrix, size, size + 1)
    if verify:
        for i, row in enumerate(a):
            residual = sum((row[j] * x[j] for j in range(size)), b[i] * 0) - b[i]
            if residual:
                logger.error("solve_linear_residual_nonzero", row=i)
                raise SingularMatrixError(f"back-substitution residual nonzero in row {i}")
    return x


def invert(a: Sequence[Sequence[E]]) -> list[list[E]]:
    """Inverse of a nonsingular square matrix."""
    size = _check_square(a)
    if size == 0:
        return []
    zero = a[0][0] * 0
    one = zero + 1
    matrix = [list(row) + [one if i == j else zero for j in range(size)] for i, row in enumerate(a)]
    _bareiss(matrix, size)
    columns = _back_substitute(matrix, size, 2 * size)
    return [[columns[j][i] for j in range(size)] for i in range(size)]


def mat_vec(a: Sequence[Sequence[E]], x: Sequence[E]) -> list[E]:
    return [sum((row[j] * x[j] for j in range(len(x))), x[0] * 0) for row in a]
