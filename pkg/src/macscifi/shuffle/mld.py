"""Modified labeled Dyck paths, the shuffle formula D_n and the bijection Phi.

A labeled Dyck path (pi, w) labels the i-th east step and the i-th north step
of pi by x_i = w_{n+1-i}. It is modified when at every corner, where the i-th
east step ends at (i, j) and the (j+1)-th north step follows, x_i < x_{j+1}.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import comb

import structlog

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.qanalog import qpow
from macscifi.combinatorics.dyck import bounce_vector, dyck_enumerate, validate
from macscifi.combinatorics.matrices import (
    Matrix,
    as_matrix,
    binomial_pairs_exponent,
    csum,
    lb_at,
    lb_laurent,
    llb_set,
    rsum,
    shape,
    total,
)
from macscifi.combinatorics.partitions import Composition
from macscifi.exceptions import SizeCapExceededError, SizeMismatchError
from macscifi.settings.config import DEFAULT_MLD_CAP
from macscifi.symmetric.qsym import QSymExpansion, distinct_rearrangements, inverse_descent_set

logger = structlog.get_logger(__name__)

Cell = tuple[int, int]


@dataclass(frozen=True)
class LabeledDyckPath:
    path: str
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        validate(self.path)
        if sorted(self.labels) != list(range(1, len(self.path) // 2 + 1)):
            raise SizeMismatchError(
                f"labels {self.labels} are not a permutation of 1..{len(self.path) // 2}"
            )

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def steps(self) -> tuple[int, ...]:
        """x_1, ..., x_n, the label carried by the i-th north and i-th east step."""
        return tuple(reversed(self.labels))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Number of north steps before each east step."""
        out = []
        north = 0
        for step in self.path:
            if step == "N":
                north += 1
            else:
                out.append(north)
        return tuple(out)

    def corners(self) -> list[Cell]:
        """(i, j) where the i-th east step ends at height j and a north step follows."""
        out = []
        east = north = 0
        for index, step in enumerate(self.path):
            if step == "N":
                north += 1
                continue
            east += 1
            if index + 1 < len(self.path) and self.path[index + 1] == "N":
                out.append((east, north))
        return out

    def is_modified(self) -> bool:
        x = self.steps
        return all(x[i - 1] < x[j] for i, j in self.corners())

    def area_prime(self) -> int:
        """Boxes (i, j) with i < j <= H_i and x_i < x_j."""
        x = self.steps
        return sum(
            1
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.heights[i - 1] + 1)
            if x[i - 1] < x[j - 1]
        )

    def bounce(self) -> int:
        if not self.path:
            return 0
        return sum(i * part for i, part in enumerate(bounce_vector(self.path)))

    def to_json(self) -> dict[str, object]:
        return {"path": self.path, "labels": list(self.labels)}


def area_prime(path: str, labels: Sequence[int]) -> int:
    return LabeledDyckPath(path, tuple(labels)).area_prime()


def _corner_constraints(path: str) -> list[list[int]]:
    """below[m] lists the east indices i with x_i < x_m forced by a corner."""
    n = len(path) // 2
    below: list[list[int]] = [[] for _ in range(n + 1)]
    east = north = 0
    for index, step in enumerate(path):
        if step == "N":
            north += 1
            continue
        east += 1
        if index + 1 < len(path) and path[index + 1] == "N":
            below[north + 1].append(east)
    return below


def _modified_labelings(path: str) -> Iterator[tuple[int, ...]]:
    n = len(path) // 2
    below = _corner_constraints(path)
    x = [0] * (n + 1)
    free = set(range(1, n + 1))

    def grow(m: int) -> Iterator[tuple[int, ...]]:
        if m > n:
            yield tuple(reversed(x[1:]))
            return
        floor = max((x[i] for i in below[m]), default=0)
        for value in sorted(free):
            if value <= floor:
                continue
            x[m] = value
            free.remove(value)
            yield from grow(m + 1)
            free.add(value)

    yield from grow(1)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SizeCapExceededError(f"MLD enumeration at n={n} exceeds the cap {cap}")


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[LabeledDyckPath, ...]:
    out = [
        LabeledDyckPath(path, labels)
        for path in dyck_enumerate(n)
        for labels in _modified_labelings(path)
    ]
    logger.debug("mld_enumerated", n=n, count=len(out))
    return tuple(out)


def enumerate_mld(n: int, cap: int = DEFAULT_MLD_CAP) -> tuple[LabeledDyckPath, ...]:
    """Every modified labeled Dyck path of size n.

    Raises:
        SizeCapExceededError: if ``n`` is above ``cap``.
    """
    _check_cap(n, cap)
    return _enumerate(n)


def shuffle_formula(n: int, cap: int = DEFAULT_MLD_CAP) -> QSymExpansion:
    """D_n = sum over MLD(n) of t^bounce q^area' F_iDes(w)."""
    terms: dict[Composition, LaurentPoly] = {}
    for mld in enumerate_mld(n, cap):
        alpha = Composition.from_set(inverse_descent_set(mld.labels), n)
        weight = LaurentPoly.monomial(q=mld.area_prime(), t=mld.bounce())
        terms[alpha] = terms[alpha] + weight if alpha in terms else weight
    logger.info("shuffle_formula_built", n=n, terms=len(terms))
    return QSymExpansion.from_laurent_terms("F", n, terms)


def intervals(matrix: Sequence[Sequence[int]]) -> dict[Cell, tuple[int, ...]]:
    """I(M;(i,j)): row i owns a block of consecutive labels, split left to right by column."""
    m = as_matrix(matrix)
    out: dict[Cell, tuple[int, ...]] = {}
    start = 1
    for i, row in enumerate(m, start=1):
        for j, entry in enumerate(row, start=1):
            out[(i, j)] = tuple(range(start, start + entry))
            start += entry
    return out


def _check_columns(m: Matrix) -> None:
    if any(part == 0 for part in rsum(m)):
        raise SizeMismatchError(f"matrix {m} has a zero column")


def _segments(m: Matrix) -> list[tuple[int, int]]:
    """(column, offset) for each column, by position in w: last column first."""
    alpha = rsum(m)
    out = []
    offset = 0
    for j in range(len(alpha), 0, -1):
        out.append((j, offset))
        offset += alpha[j - 1]
    return out


def _column_words(m: Matrix, j: int, labels: dict[Cell, tuple[int, ...]]) -> list[list[int]]:
    rows = [i for i in range(1, len(m) + 1) for _ in range(m[i - 1][j - 1])]
    out = []
    for arrangement in distinct_rearrangements(rows):
        queues = {i: list(reversed(labels[(i, j)])) for i in range(1, len(m) + 1)}
        out.append([queues[i].pop(0) for i in arrangement])
    return out


def mld_of_matrix(matrix: Sequence[Sequence[int]]) -> list[LabeledDyckPath]:
    """MLD(M): bounce vector rsum(M), and column j of M filling its segment of w
    with the intervals I(M;(i,j)), each in decreasing order.

    Raises:
        SizeMismatchError: if M has a zero column.
    """
    m = as_matrix(matrix)
    n = total(m)
    if n == 0:
        return [LabeledDyckPath("", ())]
    _check_columns(m)
    alpha = Composition(rsum(m))
    labels = intervals(m)
    paths = [p for p in dyck_enumerate(n) if bounce_vector(p) == alpha]
    per_column = [_column_words(m, j, labels) for j, _ in _segments(m)]
    out = []
    for words in product(*per_column):
        w = tuple(label for word in words for label in word)
        for path in paths:
            candidate = LabeledDyckPath(path, w)
            if candidate.is_modified():
                out.append(candidate)
    return out


def in_mld_of_matrix(mld: LabeledDyckPath, matrix: Sequence[Sequence[int]]) -> bool:
    m = as_matrix(matrix)
    if total(m) == 0:
        return mld.n == 0
    if any(part == 0 for part in rsum(m)) or mld.n != total(m):
        return False
    if not mld.is_modified() or bounce_vector(mld.path) != Composition(rsum(m)):
        return False
    labels = intervals(m)
    position = {value: index for index, value in enumerate(mld.labels)}
    for j, offset in _segments(m):
        segment = set(mld.labels[offset : offset + rsum(m)[j - 1]])
        expected = {v for i in range(1, len(m) + 1) for v in labels[(i, j)]}
        if segment != expected:
            return False
    for block in labels.values():
        places = [position[v] for v in block]
        if places != sorted(places, reverse=True):
            return False
    return True


@dataclass(frozen=True)
class PhiImage:
    reduced: Matrix
    path: LabeledDyckPath
    word: tuple[int, ...]


def last_column_cell(m: Matrix) -> Cell:
    """(c, l): l is the last nonzero column and c the first row with M_{c,l} != 0."""
    _, cols = shape(m)
    for j in range(cols, 0, -1):
        for i in range(1, len(m) + 1):
            if m[i - 1][j - 1]:
                return i, j
    raise SizeMismatchError("the zero matrix has no last column")


def reduce_matrix(m: Matrix, cell: Cell) -> Matrix:
    """M with M_{c,l} set to 0, dropping column l when it empties."""
    c, ell = cell
    rows = [list(row) for row in m]
    rows[c - 1][ell - 1] = 0
    if all(row[ell - 1] == 0 for row in rows):
        rows = [row[: ell - 1] for row in rows]
    return tuple(tuple(row) for row in rows)


def _delete_labels(mld: LabeledDyckPath, removed: set[int]) -> LabeledDyckPath:
    x = mld.steps
    shift = len(removed)
    top = max(removed)
    steps = []
    east = north = 0
    for step in mld.path:
        if step == "N":
            north += 1
            keep = x[north - 1] not in removed
        else:
            east += 1
            keep = x[east - 1] not in removed
        if keep:
            steps.append(step)
    kept = [v - shift if v > top else v for v in x if v not in removed]
    return LabeledDyckPath("".join(steps), tuple(reversed(kept)))


def _subpath_labels(mld: LabeledDyckPath, start: Cell, end: Cell) -> list[int]:
    """Labels of the steps between lattice points ``start`` and ``end`` (east, north)."""
    x = mld.steps
    out = []
    east = north = 0
    inside = start == (0, 0)
    for step in mld.path:
        if (east, north) == end:
            break
        if step == "N":
            north += 1
            label = x[north - 1]
        else:
            east += 1
            label = x[east - 1]
        if inside:
            out.append(label)
        if (east, north) == start:
            inside = True
    return out


def phi(matrix: Sequence[Sequence[int]], mld: LabeledDyckPath) -> PhiImage:
    """Split (pi, w) in MLD(M) into an element of MLD(M') and a 0-1 word."""
    m = as_matrix(matrix)
    c, ell = last_column_cell(m)
    labels = intervals(m)
    alpha = rsum(m)
    ones = set(labels[(c, ell)])
    zeros = {
        v
        for a, b in llb_set(c, ell, len(m))
        if b >= 1 and (a, b) != (c, ell)
        for v in labels[(a, b)]
    }
    start = (sum(alpha[: max(ell - 2, 0)]), sum(alpha[: ell - 1]))
    end = (sum(alpha[: ell - 1]), mld.n)
    word = tuple(
        0 if v in zeros else 1 for v in _subpath_labels(mld, start, end) if v in zeros | ones
    )
    return PhiImage(reduce_matrix(m, (c, ell)), _delete_labels(mld, ones), word)


def _inversions(word: Sequence[int]) -> int:
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


def _word_length(m: Matrix, cell: Cell) -> int:
    c, ell = cell
    if ell == 1:
        return sum(m[a - 1][0] for a in range(c, len(m) + 1))
    return lb_at(m, cell)


def _word_count(length: int, ones: int, leading_zero: bool) -> int:
    return comb(length - 1, ones) if leading_zero else comb(length, ones)


def phi_check(matrix: Sequence[Sequence[int]]) -> bool:
    """Phi is a bijection MLD(M) -> MLD(M') x W with area' = area'(Phi_1) + inv(Phi_2) + C(M_cl, 2).

    W holds the 0-1 words of length LB(M;(c,l)) with M_{c,l} ones, starting
    with 0 when l > 1.
    """
    m = as_matrix(matrix)
    if total(m) == 0:
        return True
    cell = last_column_cell(m)
    c, ell = cell
    entry = m[c - 1][ell - 1]
    length = _word_length(m, cell)
    leading_zero = ell > 1
    domain = mld_of_matrix(m)
    reduced = reduce_matrix(m, cell)
    seen = set()
    for mld in domain:
        image = phi(m, mld)
        word = image.word
        if (
            not in_mld_of_matrix(image.path, reduced)
            or len(word) != length
            or sum(word) != entry
            or (leading_zero and word and word[0] != 0)
        ):
            logger.warning("phi_image_invalid", matrix=m, mld=mld.to_json(), word=list(word))
            return False
        expected = image.path.area_prime() + _inversions(word) + entry * (entry - 1) // 2
        if mld.area_prime() != expected:
            logger.warning("phi_area_mismatch", matrix=m, mld=mld.to_json())
            return False
        seen.add((image.path, word))
    target = len(mld_of_matrix(reduced)) * _word_count(length, entry, leading_zero)
    if len(seen) != len(domain) or len(domain) != target:
        logger.warning("phi_not_bijective", matrix=m, domain=len(domain), target=target)
        return False
    return True


def mld_generating_function(matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    value = LaurentPoly()
    for mld in mld_of_matrix(matrix):
        value = value + qpow(mld.area_prime())
    return value


def mld_generating_check(matrix: Sequence[Sequence[int]]) -> bool:
    """sum over MLD(M) of q^area' = q^{sum C(M_ij, 2)} LB(M)."""
    m = as_matrix(matrix)
    expected = qpow(binomial_pairs_exponent(m)) * lb_laurent(m)
    result = mld_generating_function(m) == expected
    if not result:
        logger.warning("mld_generating_mismatch", matrix=m, row_sums=csum(m))
    return result
