"""Symmetric expansions and exact basis conversion.

The monomial basis is the hub: every other basis carries a transition matrix
to m (rows indexed by the source partition, columns by the m index), and
conversions out of m use the inverse matrix. Matrices are built once per
degree and cached.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from threading import Lock

import structlog

from macscifi.algebra.linalg import invert
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import Partition, partitions_of

from .base import Expansion

logger = structlog.get_logger(__name__)

CLASSICAL_BASES = ("m", "h", "e", "p", "s")
BASES = (*CLASSICAL_BASES, "Htilde")

_matrix_lock = Lock()
_inverses: dict[tuple[str, int], tuple[tuple[Fraction, ...], ...]] = {}


class SymExpansion(Expansion[Partition]):
    BASES = BASES

    @classmethod
    def _key(cls, key: tuple[int, ...]) -> Partition:
        return key if isinstance(key, Partition) else Partition(key)

    def _label(self, key: Partition) -> str:
        name = "H" if self.basis == "Htilde" else self.basis
        return f"{name}[{','.join(str(p) for p in key)}]"


def z_rho(rho: Sequence[int]) -> int:
    """z_rho = prod over i of i^(m_i) * m_i!."""
    return prod(i**m * factorial(m) for i, m in Counter(rho).items())


def _count_fillings(
    parts: Sequence[int],
    target: Sequence[int],
    rows: Callable[[int, int], Iterator[tuple[int, ...]]],
) -> int:
    """Number of ways to choose one row vector per part summing to ``target``."""

    @lru_cache(maxsize=None)
    def count(index: int, remaining: tuple[int, ...]) -> int:
        if index == len(parts):
            return int(not any(remaining))
        total = 0
        for row in rows(parts[index], len(remaining)):
            if all(x <= r for x, r in zip(row, remaining, strict=True)):
                total += count(index + 1, tuple(r - x for r, x in zip(remaining, row, strict=True)))
        return total

    return count(0, tuple(target))


def _compositions_with_zeros(total: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_with_zeros(total - first, length - 1):
            yield (first, *rest)


def _zero_one_rows(total: int, length: int) -> Iterator[tuple[int, ...]]:
    for row in _compositions_with_zeros(total, length):
        if all(x <= 1 for x in row):
            yield row


def _single_block_rows(total: int, length: int) -> Iterator[tuple[int, ...]]:
    for j in range(length):
        yield tuple(total if i == j else 0 for i in range(length))


_ROW_RULES = {"h": _compositions_with_zeros, "e": _zero_one_rows, "p": _single_block_rows}


def _h_coefficients_of_schur(lam: Partition) -> dict[Partition, int]:
    """Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j})."""
    size = len(lam)
    out: Counter[Partition] = Counter()
    for perm in permutations(range(size)):
        parts = [lam[i] - i + perm[i] for i in range(size)]
        if any(p < 0 for p in parts):
            continue
        inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        key = Partition(sorted((p for p in parts if p), reverse=True))
        out[key] += -1 if inversions % 2 else 1
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def to_m_matrix(basis: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows: source basis index; columns: m index, both in partitions_of(n) order."""
    index = partitions_of(n)
    if basis == "m":
        size = len(index)
        return tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))
    if basis == "s":
        h_rows = to_m_matrix("h", n)
        position = {lam: i for i, lam in enumerate(index)}
        rows = []
        for lam in index:
            row = [Fraction(0)] * len(index)
            for mu, coeff in _h_coefficients_of_schur(lam).items():
                source = h_rows[position[mu]]
                for j, value in enumerate(source):
                    row[j] += coeff * value
            rows.append(tuple(row))
        return tuple(rows)
    rule = _ROW_RULES[basis]
    return tuple(
        tuple(Fraction(_count_fillings(lam, mu, rule)) for mu in index) for lam in index
    )


def from_m_matrix(basis: str, n: int) -> tuple[tuple[Fraction, ...], ...]:
    key = (basis, n)
    with _matrix_lock:
        if key not in _inverses:
            inverse = invert([list(row) for row in to_m_matrix(basis, n)])
            _inverses[key] = tuple(tuple(row) for row in inverse)
            logger.debug("transition_matrix_inverted", basis=basis, degree=n)
        return _inverses[key]


def apply_matrix(
    expansion: SymExpansion,
    matrix: Sequence[Sequence[Fraction | RationalFunction]],
    target: str,
) -> SymExpansion:
    index = partitions_of(expansion.degree)
    position = {lam: i for i, lam in enumerate(index)}
    out: dict[Partition, RationalFunction] = {}
    for lam, coeff in expansion.items():
        for j, value in enumerate(matrix[position[lam]]):
            if not value:
                continue
            mu = index[j]
            term = coeff * value
            out[mu] = out[mu] + term if mu in out else term
    return SymExpansion(target, expansion.degree, out)


def convert(expansion: SymExpansion, target: str) -> SymExpansion:
    """Exact change of basis, routed through m."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if expansion.basis == target:
        return expansion
    if expansion.degree == 0:
        return SymExpansion(target, 0, dict(expansion.terms))
    if expansion.basis == "Htilde" or target == "Htilde":
        from macscifi.nabla.expansion import from_htilde, to_htilde

        if expansion.basis == "Htilde":
            return convert(from_htilde(expansion), target)
        return to_htilde(convert(expansion, "m"))
    monomial = (
        expansion
        if expansion.basis == "m"
        else apply_matrix(expansion, to_m_matrix(expansion.basis, expansion.degree), "m")
    )
    if target == "m":
        return monomial
    return apply_matrix(monomial, from_m_matrix(target, expansion.degree), target)


def element(basis: str, parts: Sequence[int], coeff: RationalFunction | int = 1) -> SymExpansion:
    return SymExpansion.basis_element(basis, tuple(parts), coeff)


def e(n: int) -> SymExpansion:
    return element("e", (n,) if n else ())


def h(n: int) -> SymExpansion:
    return element("h", (n,) if n else ())


def _sign(rho: Sequence[int]) -> int:
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def omega(expansion: SymExpansion) -> SymExpansion:
    """p_rho -> (-1)^(|rho| - l(rho)) p_rho, returned in the input basis."""
    power = convert(expansion, "p")
    flipped = SymExpansion(
        "p", power.degree, {rho: c if _sign(rho) > 0 else -c for rho, c in power.items()}
    )
    return convert(flipped, expansion.basis)


_Q_INV = RationalFunction.variable("q") ** -1
_T_INV = RationalFunction.variable("t") ** -1


def rev_coefficient(value: RationalFunction) -> RationalFunction:
    return value.evaluate({"q": _Q_INV, "t": _T_INV})


def rev(expansion: SymExpansion) -> SymExpansion:
    """q,t-reversal of a symmetric function."""
    if expansion.basis == "Htilde":
        return convert(rev(convert(expansion, "m")), "Htilde")
    return expansion.map_coefficients(rev_coefficient)


def multiply(f: SymExpansion, g: SymExpansion) -> SymExpansion:
    """Product, computed in the power-sum basis."""
    pf, pg = convert(f, "p"), convert(g, "p")
    out: dict[Partition, RationalFunction] = {}
    for rho, a in pf.items():
        for nu, b in pg.items():
            key = Partition(sorted((*rho, *nu), reverse=True))
            term = a * b
            out[key] = out[key] + term if key in out else term
    return SymExpansion("p", f.degree + g.degree, out)


def scale_power_sums(
    expansion: SymExpansion, weight: Callable[[int], RationalFunction]
) -> SymExpansion:
    """Plethystic rescaling p_k -> weight(k) p_k, returned in the p basis."""
    power = convert(expansion, "p")
    one = RationalFunction.constant(1)
    return SymExpansion(
        "p",
        power.degree,
        {rho: c * prod((weight(part) for part in rho), start=one) for rho, c in power.items()},
    )


def equal(f: SymExpansion, g: SymExpansion) -> bool:
    """Equality as symmetric functions, whatever the bases."""
    if f.degree != g.degree:
        return f.is_zero() and g.is_zero()
    if f.basis == g.basis:
        return f == g
    basis = "m" if "Htilde" in (f.basis, g.basis) else f.basis
    return convert(f, basis) == convert(g, basis)
