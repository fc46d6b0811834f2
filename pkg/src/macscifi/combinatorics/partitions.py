"""Partitions, compositions and cell statistics.

Cells are 1-indexed ``(row, col)`` pairs in French notation: row 1 is the
bottom row and a partition's i-th part is the length of row i.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.exceptions import CellNotInShapeError, NotRemovableError, SizeMismatchError

Cell = tuple[int, int]


def _parse_parts(text: str) -> tuple[int, ...]:
    body = text.strip().strip("[]()")
    if not body:
        return ()
    try:
        return tuple(int(piece) for piece in body.replace(" ", "").split(",") if piece)
    except ValueError as exc:
        raise ValueError(f"cannot parse {text!r} as a list of integers") from exc


class Partition(tuple[int, ...]):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise ValueError(f"partition parts must be positive: {values}")
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {values}")
        return super().__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> Partition:
        return cls(_parse_parts(text))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def cells(self) -> list[Cell]:
        return [(i, j) for i, part in enumerate(self, start=1) for j in range(1, part + 1)]

    def has_cell(self, cell: object) -> bool:
        if not (isinstance(cell, tuple) and len(cell) == 2):
            return False
        i, j = cell
        return isinstance(i, int) and 1 <= i <= len(self) and 1 <= j <= self[i - 1]

    def multiplicities(self) -> Counter[int]:
        return Counter(self)

    def n(self) -> int:
        """Sum of (i-1) * mu_i."""
        return sum(i * p for i, p in enumerate(self))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Composition(tuple[int, ...]):
    """Tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> Composition:
        values = tuple(int(p) for p in parts)
        if any(p <= 0 for p in values):
            raise ValueError(f"composition parts must be positive: {values}")
        return super().__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(_parse_parts(text))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def descent_set(self) -> frozenset[int]:
        """Set(alpha) = partial sums alpha_1 + ... + alpha_i for i < length."""
        out = []
        running = 0
        for part in self[:-1]:
            running += part
            out.append(running)
        return frozenset(out)

    @classmethod
    def from_set(cls, subset: Iterable[int], n: int) -> Composition:
        """Comp(S) for S a subset of [n-1]."""
        points = sorted(subset)
        if any(p < 1 or p > n - 1 for p in points):
            raise ValueError(f"subset {points} is not inside [1, {n - 1}]")
        if n == 0:
            return cls(())
        bounds = [0, *points, n]
        return cls(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))

    def sorted_partition(self) -> Partition:
        return Partition(sorted(self, reverse=True))

    def refinements(self) -> Iterator[Composition]:
        """Compositions beta whose adjacent parts merge to self."""
        n = self.size
        fixed = self.descent_set()
        free = [i for i in range(1, n) if i not in fixed]
        for mask in range(1 << len(free)):
            extra = {free[b] for b in range(len(free)) if mask >> b & 1}
            yield Composition.from_set(fixed | extra, n)

    def coarsenings(self) -> Iterator[Composition]:
        n = self.size
        points = sorted(self.descent_set())
        for mask in range(1 << len(points)):
            yield Composition.from_set({points[b] for b in range(len(points)) if mask >> b & 1}, n)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


@lru_cache(maxsize=None)
def partitions_of(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order."""
    if n == 0:
        return (Partition(),)
    top = n if largest is None else min(largest, n)
    out: list[Partition] = []
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append(Partition((first, *rest)))
    return tuple(out)


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return (Composition(),)
    return tuple(
        Composition.from_set({i + 1 for i in range(n - 1) if mask >> i & 1}, n)
        for mask in range(1 << (n - 1))
    )


def _check_cell(mu: Partition, cell: Cell) -> tuple[int, int]:
    if not mu.has_cell(cell):
        raise CellNotInShapeError(f"cell {cell} is not in {tuple(mu)}")
    return cell


def arm(mu: Partition, cell: Cell) -> int:
    i, j = _check_cell(mu, cell)
    return mu[i - 1] - j


def leg(mu: Partition, cell: Cell) -> int:
    i, j = _check_cell(mu, cell)
    return mu.conjugate()[j - 1] - i


def coarm(mu: Partition, cell: Cell) -> int:
    _, j = _check_cell(mu, cell)
    return j - 1


def coleg(mu: Partition, cell: Cell) -> int:
    i, _ = _check_cell(mu, cell)
    return i - 1


def t_weight(mu: Partition) -> RationalFunction:
    """T_mu = prod over cells of t^(i-1) q^(j-1)."""
    return RationalFunction.from_laurent(t_weight_laurent(mu))


def t_weight_laurent(mu: Partition) -> LaurentPoly:
    return LaurentPoly.monomial(q=Partition(mu).conjugate().n(), t=Partition(mu).n())


def biexponent(mu: Partition) -> RationalFunction:
    """B_mu = sum over cells of q^coarm t^coleg."""
    return RationalFunction.from_laurent(biexponent_laurent(mu))


def biexponent_laurent(mu: Partition) -> LaurentPoly:
    return LaurentPoly(
        {
            tuple(pair for pair in (("q", j - 1), ("t", i - 1)) if pair[1]): 1
            for i, j in mu.cells()
        }
    )


M_LAURENT = (1 - LaurentPoly.variable("q")) * (1 - LaurentPoly.variable("t"))


def d_alphabet(mu: Partition) -> LaurentPoly:
    """D_mu = (1-q)(1-t) B_mu - 1."""
    return M_LAURENT * biexponent_laurent(mu) - 1


def pi_product(mu: Partition) -> RationalFunction:
    """Product of (1 - q^coarm t^coleg) over cells other than (1,1)."""
    result = LaurentPoly.constant(1)
    for i, j in mu.cells():
        if (i, j) == (1, 1):
            continue
        result = result * (1 - LaurentPoly.monomial(q=j - 1, t=i - 1))
    return RationalFunction.from_laurent(result)


def hook_products(mu: Partition) -> tuple[RationalFunction, RationalFunction]:
    """(prod (q^arm - t^(leg+1)), prod (t^leg - q^(arm+1)))."""
    first = LaurentPoly.constant(1)
    second = LaurentPoly.constant(1)
    for cell in mu.cells():
        a, b = arm(mu, cell), leg(mu, cell)
        first = first * (LaurentPoly.monomial(q=a) - LaurentPoly.monomial(t=b + 1))
        second = second * (LaurentPoly.monomial(t=b) - LaurentPoly.monomial(q=a + 1))
    return RationalFunction.from_laurent(first), RationalFunction.from_laurent(second)


def removable_corners(mu: Partition) -> list[Cell]:
    """Removable corners listed from top to bottom."""
    corners = [
        (i, mu[i - 1]) for i in range(1, len(mu) + 1) if i == len(mu) or mu[i] < mu[i - 1]
    ]
    return sorted(corners, reverse=True)


def remove_cell(mu: Partition, cell: Cell) -> Partition:
    if cell not in removable_corners(mu):
        raise NotRemovableError(f"cell {cell} is not a removable corner of {tuple(mu)}")
    i, _ = cell
    parts = list(mu)
    parts[i - 1] -= 1
    return Partition(p for p in parts if p)


def intersect(*partitions: Partition) -> Partition:
    """Component-wise minimum."""
    if not partitions:
        raise SizeMismatchError("intersect needs at least one partition")
    length = min(len(p) for p in partitions)
    return Partition(min(p[i] for p in partitions) for i in range(length))


def union(*partitions: Partition) -> Partition:
    length = max(len(p) for p in partitions)
    return Partition(max(p[i] if i < len(p) else 0 for p in partitions) for i in range(length))


def corner_removals(mu: Partition) -> list[Partition]:
    return [remove_cell(mu, corner) for corner in removable_corners(mu)]


def augmented_staircase(k: int) -> Partition:
    """(k^k, k-1, ..., 1)."""
    return Partition([k] * k + list(range(k - 1, 0, -1)))


def plus_ones(lam: Sequence[int], count: int | None = None) -> Partition:
    """lambda + (1^count): one added to each of the first count parts, zeros padded.

    count defaults to l(lambda).
    """
    parts = list(lam)
    count = len(parts) if count is None else count
    parts += [0] * (count - len(parts))
    return Partition(p + 1 if i < count else p for i, p in enumerate(parts))
