"""The sign-reversing involution tau on reduced packed tuples of R_k, and biwords.

Cells are ordered by column, then row. A used cell (a, b) is splittable when a
higher used cell shares its column, and mergeable when it is the top used cell
of its column, column b+1 holds used cells and all of them sit above row a,
and a used (a+1, b+1) belongs to an earlier block than (a, b). tau shifts every
used cell after the first mergeable or splittable cell one column left (merge)
or right (split).

Fixed points carry at most one used cell per column and are recorded as
biwords: letter b is (i, j) when the cell (j, b) lies in A_i.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from math import comb

import structlog

from macscifi.algebra.interpolation import lagrange_numerators, vandermonde
from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.qanalog import qpow
from macscifi.combinatorics.matrices import (
    Matrix,
    as_matrix,
    binomial_pairs_exponent,
    lb_at,
    lb_tilde_laurent,
    llb_set,
    total,
)
from macscifi.combinatorics.partitions import Cell
from macscifi.exceptions import SizeMismatchError
from macscifi.macdonald.tuples import CellTuple, pinv_exponent

from .lightning import (
    pad_columns,
    rectangle_sum,
    reduced_rectangle,
    reduced_tuples,
    z_laurent,
    z_points,
)
from .mld import last_column_cell

logger = structlog.get_logger(__name__)

Letter = tuple[int, int]
Biword = tuple[Letter, ...]


def _order(cell: Cell) -> tuple[int, int]:
    return cell[1], cell[0]


def _column(cells: CellTuple, b: int) -> list[int]:
    return [row for row, col in cells.used if col == b]


def is_splittable(cells: CellTuple, cell: Cell) -> bool:
    a, b = cell
    return any(row > a for row in _column(cells, b))


def is_mergeable(cells: CellTuple, cell: Cell) -> bool:
    a, b = cell
    nxt = _column(cells, b + 1)
    if not nxt or any(row > a for row in _column(cells, b)):
        return False
    if any(row <= a for row in nxt):
        return False
    above = (a + 1, b + 1)
    return above not in cells.used or cells.block(above) < cells.block(cell)


def _shift(cells: CellTuple, pivot: Cell, step: int) -> CellTuple:
    def move(cell: Cell) -> Cell:
        return (cell[0], cell[1] + step) if _order(cell) > _order(pivot) else cell

    return CellTuple(
        cells.diagram, tuple(frozenset(move(c) for c in block) for block in cells.blocks)
    )


def tau(cells: CellTuple) -> CellTuple:
    """Merge or split at the first mergeable or splittable cell; fixed when there is none."""
    for cell in sorted(cells.used, key=_order):
        if is_splittable(cells, cell):
            return _shift(cells, cell, 1)
        if is_mergeable(cells, cell):
            return _shift(cells, cell, -1)
    return cells


def packed_tuples(k: int, matrix: Sequence[Sequence[int]]) -> list[CellTuple]:
    """OP^{red,packed}(R_k; M)."""
    tuples = reduced_tuples(reduced_rectangle(k), pad_columns(matrix, k - 1))
    return [cells for cells in tuples if cells.is_packed()]


def tau_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """tau is a pinv-preserving involution changing l(L) by one off its fixed points."""
    domain = packed_tuples(k, matrix)
    members = set(domain)
    for cells in domain:
        image = tau(cells)
        ok = (
            image in members
            and tau(image) == cells
            and pinv_exponent(image) == pinv_exponent(cells)
        )
        if ok and image == cells:
            ok = all(c <= 1 for c in cells.c_vector())
        elif ok:
            ok = abs(image.length - cells.length) == 1
        if not ok:
            logger.warning("tau_check_failed", k=k, cells=cells.to_json())
            return False
    return True


def tau_fixed_sum(k: int, matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    value = LaurentPoly()
    for cells in packed_tuples(k, matrix):
        if tau(cells) == cells:
            value = value + qpow(pinv_exponent(cells))
    return value


def signed_packed_sum(k: int, matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    """sum over OP^{red,packed}(R_k; M) of (-1)^{|M| - l(L)} pinv(L)."""
    size = total(as_matrix(matrix))
    value = LaurentPoly()
    for cells in packed_tuples(k, matrix):
        term = qpow(pinv_exponent(cells))
        value = value + (-term if (size - cells.length) % 2 else term)
    return value


def _lb_tilde_target(m: Matrix) -> LaurentPoly:
    return qpow(binomial_pairs_exponent(m)) * lb_tilde_laurent(m)


def _check_rectangle_type(k: int, matrix: Sequence[Sequence[int]]) -> Matrix:
    m = pad_columns(matrix, k - 1)
    if total(m) > k - 1:
        raise SizeMismatchError(f"|M| must be at most k-1 = {k - 1}, got {total(m)}")
    return m


def toward_lb_tilde_identity(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """sum_i prod 1/(z_j - z_i) z_i^{k-1-|M|} sum over OP^red(R_k; M) of eta(prod z^c) pinv
    = (-1)^{k-1-|M|} q^{sum C} LB-tilde(M)."""
    m = _check_rectangle_type(k, matrix)
    gap = k - 1 - total(m)
    points = z_points(k)
    numerator = LaurentPoly()
    for weight, i in zip(lagrange_numerators(points), range(1, k + 1), strict=True):
        numerator = numerator + weight * z_laurent(i) ** gap * rectangle_sum(k, i, m)
    expected = _lb_tilde_target(m) * vandermonde(points)
    return numerator == (-expected if gap % 2 else expected)


def toward_lb_tilde_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """The symbolic identity, the signed packed sum, and the involution that evaluates it."""
    m = _check_rectangle_type(k, matrix)
    target = _lb_tilde_target(m)
    checks = {
        "identity": toward_lb_tilde_identity(k, m),
        "signed_sum": signed_packed_sum(k, m) == target,
        "involution": tau_check(k, m),
        "fixed_sum": tau_fixed_sum(k, m) == target,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning("toward_lb_tilde_failed", k=k, matrix=m, failed=failed)
    return not failed


def biword(cells: CellTuple) -> Biword:
    """Letters (block, row) of the used cells column by column.

    Raises:
        SizeMismatchError: if some column holds more than one used cell.
    """
    letters: dict[int, Letter] = {}
    for row, col in cells.used:
        if col in letters:
            raise SizeMismatchError(f"column {col} holds more than one used cell")
        letters[col] = (cells.block((row, col)), row)
    return tuple(letters[col] for col in sorted(letters))


def from_biword(k: int, word: Sequence[Letter], blocks: int) -> CellTuple:
    chosen: list[list[Cell]] = [[] for _ in range(blocks)]
    for col, (i, j) in enumerate(word, start=1):
        chosen[i - 1].append((j, col))
    return CellTuple.of(reduced_rectangle(k), chosen)


def is_valid_biword(word: Sequence[Letter]) -> bool:
    """Each step has j_r >= j_{r+1}, or j_r = j_{r+1} - 1 with i_r <= i_{r+1}."""
    return all(
        j0 >= j1 or (j0 == j1 - 1 and i0 <= i1)
        for (i0, j0), (i1, j1) in zip(word, word[1:], strict=False)
    )


def biword_pinv(word: Sequence[Letter]) -> int:
    """Pairs x < y with j_x = j_y and i_x >= i_y, and pairs y < x with j_x = j_y + 1 and
    i_x >= i_y."""
    count = 0
    for x, (ix, jx) in enumerate(word):
        for y, (iy, jy) in enumerate(word):
            if ix < iy:
                continue
            if (jx == jy and x < y) or (jx == jy + 1 and y < x):
                count += 1
    return count


def _letters(m: Matrix) -> Counter[Letter]:
    return Counter(
        {(i, j): x for i, row in enumerate(m, start=1) for j, x in enumerate(row, start=1) if x}
    )


def biwords_of(matrix: Sequence[Sequence[int]]) -> list[Biword]:
    """BW(M): valid biwords using the letter (i, j) exactly M_ij times."""
    pool = _letters(as_matrix(matrix))
    size = sum(pool.values())
    out: list[Biword] = []

    def grow(prefix: list[Letter]) -> None:
        if len(prefix) == size:
            out.append(tuple(prefix))
            return
        for letter in sorted(pool):
            if not pool[letter]:
                continue
            if prefix and not is_valid_biword((prefix[-1], letter)):
                continue
            pool[letter] -= 1
            prefix.append(letter)
            grow(prefix)
            prefix.pop()
            pool[letter] += 1

    grow([])
    return out


def phi_tilde(
    matrix: Sequence[Sequence[int]], word: Sequence[Letter]
) -> tuple[Biword, tuple[int, ...]]:
    """Drop the letters (c, l), and record the LLB(c, l) letters as 0 and (c, l) as 1."""
    m = as_matrix(matrix)
    c, ell = last_column_cell(m)
    marked = {cell for cell in llb_set(c, ell, len(m)) if cell[1] >= 1} - {(c, ell)}
    reduced = tuple(letter for letter in word if letter != (c, ell))
    bits = tuple(
        1 if letter == (c, ell) else 0 for letter in word if letter == (c, ell) or letter in marked
    )
    return reduced, bits


def _inversions(bits: Sequence[int]) -> int:
    return sum(1 for a in range(len(bits)) for b in range(a + 1, len(bits)) if bits[a] > bits[b])


def phi_tilde_check(matrix: Sequence[Sequence[int]]) -> bool:
    """phi-tilde is a bijection BW(M) -> BW(M') x {0-1 words of length s with M_cl ones},
    with pinv = pinv(reduced) + inv(bits) + C(M_cl, 2)."""
    m = as_matrix(matrix)
    if total(m) == 0:
        return True
    c, ell = last_column_cell(m)
    entry = m[c - 1][ell - 1]
    length = lb_at(m, (c, ell)) if ell > 1 else sum(row[0] for row in m[c - 1 :])
    reduced_matrix = tuple(
        tuple(0 if (i, j) == (c, ell) else x for j, x in enumerate(row, start=1))
        for i, row in enumerate(m, start=1)
    )
    targets = set(biwords_of(reduced_matrix))
    domain = biwords_of(m)
    seen = set()
    for word in domain:
        reduced, bits = phi_tilde(m, word)
        expected = biword_pinv(reduced) + _inversions(bits) + entry * (entry - 1) // 2
        if (
            reduced not in targets
            or len(bits) != length
            or sum(bits) != entry
            or biword_pinv(word) != expected
        ):
            logger.warning("phi_tilde_failed", matrix=m, word=list(word))
            return False
        seen.add((reduced, bits))
    return len(seen) == len(domain) == len(targets) * comb(length, entry)


def biword_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """Fixed points of tau correspond to BW(M), with pinv read off the biword."""
    m = _check_rectangle_type(k, matrix)
    fixed = [cells for cells in packed_tuples(k, m) if tau(cells) == cells]
    words = set()
    for cells in fixed:
        word = biword(cells)
        if not is_valid_biword(word) or biword_pinv(word) != pinv_exponent(cells):
            logger.warning("biword_mismatch", k=k, cells=cells.to_json())
            return False
        words.add(word)
    return words == set(biwords_of(m))
