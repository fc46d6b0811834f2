"""The modified Macdonald basis and the nabla operator.

Coordinates in the H~ basis come from the exact inverse of the matrix whose
rows are the m-expansions of H~_mu, mu |- n. The rows themselves are read off
the inv/maj formula, so no plethystic shortcut is involved anywhere.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import lru_cache
from threading import Lock

import structlog

from macscifi.algebra.linalg import invert
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import Partition, partitions_of, t_weight
from macscifi.exceptions import DegreeMismatchError, SizeCapExceededError
from macscifi.macdonald.hhl import hhl_macdonald
from macscifi.settings.config import DEFAULT_NABLA_CAP
from macscifi.symmetric.qsym import qsym_to_sym
from macscifi.symmetric.sym import SymExpansion, apply_matrix, convert

logger = structlog.get_logger(__name__)

Matrix = tuple[tuple[RationalFunction, ...], ...]

_matrix_lock = Lock()
_inverses: dict[int, Matrix] = {}


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SizeCapExceededError(f"degree {n} exceeds the nabla cap {cap}")


@lru_cache(maxsize=None)
def htilde_matrix(n: int) -> Matrix:
    """Row mu holds the m-coefficients of H~_mu, both indexed by partitions_of(n)."""
    index = partitions_of(n)
    rows = []
    for mu in index:
        monomial = qsym_to_sym(hhl_macdonald(mu, cap=n))
        rows.append(tuple(monomial.coefficient(lam) for lam in index))
    return tuple(rows)


def htilde_inverse(n: int) -> Matrix:
    """Inverse of htilde_matrix(n), computed once per degree."""
    with _matrix_lock:
        if n not in _inverses:
            inverse = invert([list(row) for row in htilde_matrix(n)])
            _inverses[n] = tuple(tuple(row) for row in inverse)
            logger.info("htilde_matrix_inverted", degree=n, size=len(inverse))
        return _inverses[n]


def to_htilde(expansion: SymExpansion, cap: int = DEFAULT_NABLA_CAP) -> SymExpansion:
    _check_cap(expansion.degree, cap)
    monomial = convert(expansion, "m")
    return apply_matrix(monomial, htilde_inverse(expansion.degree), "Htilde")


def from_htilde(expansion: SymExpansion, cap: int = DEFAULT_NABLA_CAP) -> SymExpansion:
    """Reconstruct sum c_mu H~_mu in the m basis."""
    _check_cap(expansion.degree, cap)
    return apply_matrix(expansion, htilde_matrix(expansion.degree), "m")


def mac_expand(
    f: SymExpansion, n: int | None = None, cap: int = DEFAULT_NABLA_CAP
) -> SymExpansion:
    """Coordinates of ``f`` in the H~ basis, as an expansion with basis "Htilde".

    Raises:
        DegreeMismatchError: if ``n`` is given and differs from the degree of ``f``.
        SizeCapExceededError: if the degree is above ``cap``.
    """
    if n is not None and n != f.degree:
        raise DegreeMismatchError(f"expected degree {n}, got {f.degree}")
    if f.basis == "Htilde":
        return f
    if f.degree == 0:
        return SymExpansion("Htilde", 0, dict(f.terms))
    return to_htilde(f, cap=cap)


def _eigen_scale(
    f: SymExpansion,
    weight: Callable[[Partition], RationalFunction],
    n: int | None,
    cap: int,
) -> SymExpansion:
    coords = mac_expand(f, n, cap)
    scaled = SymExpansion(
        "Htilde", coords.degree, {mu: c * weight(mu) for mu, c in coords.items()}
    )
    if f.basis == "Htilde":
        return scaled
    if f.degree == 0:
        return SymExpansion(f.basis, 0, dict(scaled.terms))
    return convert(from_htilde(scaled, cap=cap), f.basis)


def nabla(f: SymExpansion, n: int | None = None, cap: int = DEFAULT_NABLA_CAP) -> SymExpansion:
    """nabla H~_mu = T_mu H~_mu, extended linearly; returned in the basis of ``f``."""
    return _eigen_scale(f, t_weight, n, cap)


def nabla_inv(
    f: SymExpansion, n: int | None = None, cap: int = DEFAULT_NABLA_CAP
) -> SymExpansion:
    return _eigen_scale(f, lambda mu: t_weight(mu).inverse(), n, cap)
