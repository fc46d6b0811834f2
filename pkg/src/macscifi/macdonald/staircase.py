"""Deformed augmented staircases and their z-deformed fillings.

For 1 <= i <= k, mu^(i) is the augmented staircase (k^k, k-1, ..., 1) with its
i-th removable corner (counted from the top) deleted. The deformed diagram
is obtained by pushing the shortened column to the far left with S_{i-1}, ...,
S_1 and then cycling it to the far right, one row up.
"""

from __future__ import annotations

from functools import lru_cache

import structlog

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import (
    Cell,
    Partition,
    augmented_staircase,
    remove_cell,
    removable_corners,
)
from macscifi.exceptions import FillingError, IndexOutOfRangeError

from .diagram import Diagram, FilledDiagram, longest_word, stat
from .moves import column_exchange, cycling

logger = structlog.get_logger(__name__)


def _check(k: int, i: int) -> None:
    if k < 2 or not 1 <= i <= k:
        raise IndexOutOfRangeError(
            f"deformed staircase needs 2 <= k and 1 <= i <= k, got k={k}, i={i}"
        )


def corner_removal(k: int, i: int) -> Partition:
    """mu^(i): the augmented staircase with its i-th corner from the top removed."""
    _check(k, i)
    staircase = augmented_staircase(k)
    return remove_cell(staircase, removable_corners(staircase)[i - 1])


def deformed_intervals(k: int, i: int) -> tuple[tuple[int, int], ...]:
    _check(k, i)
    columns = []
    for j in range(1, k):
        columns.append((1, 2 * k - j) if j < i else (1, 2 * k - j - 1))
    columns.append((2, 2 * k - i))
    return tuple(columns)


def _monomial(q: int, t: int) -> RationalFunction:
    return RationalFunction.from_laurent(LaurentPoly.monomial(q=q, t=t))


def closed_form_filling(k: int, i: int, cell: Cell) -> RationalFunction:
    a, b = cell
    if a <= k:
        if b < i:
            return _monomial(b - k, 2 * k - a - b + 1)
        if b < k:
            return _monomial(b - k + 1, 2 * k - a - b)
        return _monomial(i - k, 2 * k - i - a + 1)
    if b < i:
        return _monomial(a + b - 2 * k, 2 * k - a - b + 1)
    if b < k:
        return _monomial(a + b - 2 * k + 1, 2 * k - a - b)
    return _monomial(i + a - 2 * k - 1, 2 * k - i - a + 1)


def deformed_diagram_closed_form(k: int, i: int) -> FilledDiagram:
    diagram = Diagram(deformed_intervals(k, i))
    return FilledDiagram(
        diagram, {cell: closed_form_filling(k, i, cell) for cell in diagram.non_bottom_cells}
    )


def deformed_diagram_constructive(k: int, i: int) -> FilledDiagram:
    """cycling(S_1 ... S_{i-1}(mu^(i), standard filling))."""
    filled = FilledDiagram.standard(corner_removal(k, i))
    for j in range(i - 1, 0, -1):
        filled = column_exchange(filled, j)
    return cycling(filled)


@lru_cache(maxsize=None)
def deformed_diagram(k: int, i: int, check: bool = True) -> FilledDiagram:
    """The deformed staircase with its filling, built both ways.

    Raises:
        FillingError: if ``check`` is set and the two constructions disagree.
    """
    built = deformed_diagram_constructive(k, i)
    if check:
        closed = deformed_diagram_closed_form(k, i)
        if built.diagram != closed.diagram or dict(built.filling) != dict(closed.filling):
            logger.error("deformed_diagram_mismatch", k=k, i=i)
            raise FillingError(f"constructive and closed-form fillings differ for k={k}, i={i}")
    return built


def z_name(j: int) -> str:
    return f"z{j}"


def z_variable(j: int) -> RationalFunction:
    return RationalFunction.variable(z_name(j))


def z_filling(k: int, i: int, cell: Cell) -> RationalFunction:
    a, b = cell
    top = z_variable(2 * k + 1 - a)
    q = RationalFunction.variable("q")
    if b < i:
        return q * top / z_variable(b)
    if b < k:
        return q * top / z_variable(b + 1)
    if a <= k:
        return q * top / z_variable(i)
    return top / z_variable(i)


@lru_cache(maxsize=None)
def deformed_diagram_z(k: int, i: int) -> FilledDiagram:
    diagram = Diagram(deformed_intervals(k, i))
    return FilledDiagram(
        diagram, {cell: z_filling(k, i, cell) for cell in diagram.non_bottom_cells}
    )


def z_specialization(k: int) -> dict[str, RationalFunction]:
    """z_j = q^(1-j) t^(j-1) for j <= k, and q^-k t^(j-1) beyond."""
    return {
        z_name(j): _monomial(1 - j if j <= k else -k, j - 1) for j in range(1, 2 * k)
    }


def longest_stat(k: int, i: int) -> RationalFunction:
    """stat of the longest word on the z-deformed diagram, computed directly."""
    filled = deformed_diagram_z(k, i)
    return stat(filled, longest_word(filled.size))


def longest_stat_closed_form(k: int, i: int) -> RationalFunction:
    _check(k, i)
    exponent = (4 * k**3 - 3 * k**2 - 4 * k) // 3
    value = RationalFunction.variable("q") ** exponent * z_variable(i)
    value = value / z_variable(2 * k - 1)
    for j in range(1, k):
        value = value * z_variable(2 * k - j) ** k / z_variable(j) ** (2 * k - 2 * j)
    return value
