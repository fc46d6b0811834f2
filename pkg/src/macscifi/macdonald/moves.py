"""Column exchange S_j, its inverse, and cycling on filled diagrams."""

from __future__ import annotations

import structlog

from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import Cell
from macscifi.exceptions import IndexOutOfRangeError, NotInVError

from .diagram import Diagram, FilledDiagram

logger = structlog.get_logger(__name__)

_Q = RationalFunction.variable("q")
_Q_INV = _Q**-1


def _pair(filled: FilledDiagram, j: int) -> tuple[int, int, int]:
    """Common bottom row and the heights of columns j and j+1."""
    columns = filled.diagram.columns
    if not 1 <= j < len(columns):
        raise IndexOutOfRangeError(f"column index {j} needs 1 <= j < {len(columns)}")
    (lo, hi), (lo2, hi2) = columns[j - 1], columns[j]
    if lo != lo2:
        raise NotInVError(f"columns {j} and {j + 1} do not share a bottom row")
    return lo, hi - lo + 1, hi2 - lo + 1


def _rebuild(
    filled: FilledDiagram,
    j: int,
    heights: tuple[int, int],
    local: dict[Cell, RationalFunction],
) -> FilledDiagram:
    """Replace columns j, j+1 by intervals of the given heights; ``local`` is 1-based in-pair."""
    lo = filled.diagram.columns[j - 1][0]
    columns = list(filled.diagram.columns)
    columns[j - 1] = (lo, lo + heights[0] - 1)
    columns[j] = (lo, lo + heights[1] - 1)
    filling = {cell: value for cell, value in filled.filling.items() if cell[1] not in (j, j + 1)}
    for (i, c), value in local.items():
        filling[(lo + i - 1, j + c - 1)] = value
    return FilledDiagram(Diagram(tuple(columns)), filling)


def column_exchange(filled: FilledDiagram, j: int) -> FilledDiagram:
    """S_j: swap a column of height n with a shorter right neighbour of height m.

    Raises:
        NotInVError: if the heights are not n > m or if
            f(i,1) = q^-1 f(m+1,1) f(i,2) fails for some 1 < i <= m.
    """
    lo, n, m = _pair(filled, j)
    if n <= m:
        raise NotInVError(f"S_{j} needs column {j} taller than column {j + 1} ({n} <= {m})")

    def f(i: int, c: int) -> RationalFunction:
        return filled.filling[(lo + i - 1, j + c - 1)]

    top = f(m + 1, 1)
    for i in range(2, m + 1):
        if f(i, 1) != _Q_INV * top * f(i, 2):
            logger.debug("column_exchange_rejected", column=j, row=lo + i - 1)
            raise NotInVError(f"S_{j} condition fails at local row {i}")
    local: dict[Cell, RationalFunction] = {}
    for i in range(m + 2, n + 1):
        local[(i, 2)] = f(i, 1)
    local[(m + 1, 2)] = _Q_INV * top
    for i in range(2, m + 1):
        local[(i, 2)] = f(i, 1)
        local[(i, 1)] = f(i, 2)
    return _rebuild(filled, j, (m, n), local)


def column_exchange_inv(filled: FilledDiagram, j: int) -> FilledDiagram:
    """S_j^-1: undo a column exchange when columns j, j+1 have heights m < n.

    Raises:
        NotInVError: if the pair is not in the image of S_j, i.e. when
            f(i,1) f(m+1,2) = f(i,2) fails for some 1 < i <= m.
    """
    lo, m, n = _pair(filled, j)
    if n <= m:
        raise NotInVError(f"S_{j}^-1 needs column {j + 1} taller than column {j} ({n} <= {m})")

    def f(i: int, c: int) -> RationalFunction:
        return filled.filling[(lo + i - 1, j + c - 1)]

    top = f(m + 1, 2)
    for i in range(2, m + 1):
        if f(i, 1) * top != f(i, 2):
            logger.debug("column_exchange_inv_rejected", column=j, row=lo + i - 1)
            raise NotInVError(f"S_{j}^-1 condition fails at local row {i}")
    local: dict[Cell, RationalFunction] = {}
    for i in range(m + 2, n + 1):
        local[(i, 1)] = f(i, 2)
    local[(m + 1, 1)] = _Q * top
    for i in range(2, m + 1):
        local[(i, 1)] = f(i, 2)
        local[(i, 2)] = f(i, 1)
    return _rebuild(filled, j, (n, m), local)


def cycling(filled: FilledDiagram) -> FilledDiagram:
    """[D1, D2, ..., Dl] -> [D2, ..., Dl, D1 + 1], fillings carried along."""
    columns = filled.diagram.columns
    last = len(columns)
    (lo, hi), rest = columns[0], columns[1:]
    diagram = Diagram((*rest, (lo + 1, hi + 1)))
    filling: dict[Cell, RationalFunction] = {}
    for (i, c), value in filled.filling.items():
        filling[(i + 1, last) if c == 1 else (i, c - 1)] = value
    return FilledDiagram(diagram, filling)
