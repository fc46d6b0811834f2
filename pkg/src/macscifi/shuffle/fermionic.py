"""Fermionic formulas for the coefficients frak_beta of D_n, with two classical oracles."""

from __future__ import annotations

from collections.abc import Sequence
from itertools import permutations

import structlog

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.qanalog import q_binomial, q_int, qpow
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.matrices import (
    binomial_pairs_exponent,
    lb_laurent,
    matrices_with_margins,
)
from macscifi.combinatorics.partitions import Composition, compositions_of
from macscifi.exceptions import SizeMismatchError
from macscifi.nabla.expansion import nabla
from macscifi.settings.config import DEFAULT_MLD_CAP, DEFAULT_NABLA_CAP
from macscifi.symmetric.qsym import frak_f, sym_to_qsym
from macscifi.symmetric.sym import e

from .mld import shuffle_formula

logger = structlog.get_logger(__name__)


def _bounce_weight(alpha: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.monomial(t=sum(i * part for i, part in enumerate(alpha)))


def fermionic_laurent(beta: Sequence[int], n: int | None = None) -> LaurentPoly:
    beta = Composition(beta)
    if n is not None and beta.size != n:
        raise SizeMismatchError(f"composition {tuple(beta)} does not have size {n}")
    value = LaurentPoly()
    for alpha in compositions_of(beta.size):
        inner = LaurentPoly()
        for matrix in matrices_with_margins(beta, alpha):
            inner = inner + qpow(binomial_pairs_exponent(matrix)) * lb_laurent(matrix)
        value = value + _bounce_weight(alpha) * inner
    return value


def fermionic_F(beta: Sequence[int], n: int | None = None) -> RationalFunction:  # noqa: N802
    """sum over alpha |= n of t^{sum (i-1) alpha_i} sum over M with row sums beta and
    column sums alpha of q^{sum C(M_ij, 2)} LB(M).

    Raises:
        SizeMismatchError: if ``n`` is given and beta is not a composition of it.
    """
    return RationalFunction.from_laurent(fermionic_laurent(beta, n))


def qt_catalan(n: int) -> RationalFunction:
    value = LaurentPoly()
    for alpha in compositions_of(n):
        term = _bounce_weight(alpha) * qpow(sum(a * (a - 1) // 2 for a in alpha))
        for left, right in zip(alpha, alpha[1:], strict=False):
            term = term * q_binomial(left + right - 1, right)
        value = value + term
    return RationalFunction.from_laurent(value)


def u_statistic(sigma: Sequence[int]) -> tuple[int, ...]:
    """u_i: longest run of (sigma, 0) from position i with no descent, or exactly one
    descent and first entry larger than the last."""
    padded = (*sigma, 0)
    out = []
    for i in range(len(sigma)):
        best = 1
        descents = 0
        for j in range(i + 1, len(padded)):
            if padded[j - 1] > padded[j]:
                descents += 1
            if descents > 1:
                break
            if descents == 0 or padded[i] > padded[j]:
                best = j - i + 1
        out.append(best)
    return tuple(out)


def hilbert_series(n: int) -> RationalFunction:
    """sum over sigma in S_n of t^maj(sigma) prod [u_i(sigma) - 1]_q."""
    value = LaurentPoly()
    for sigma in permutations(range(1, n + 1)):
        term = LaurentPoly.monomial(t=sum(i for i in range(1, n) if sigma[i - 1] > sigma[i]))
        for u in u_statistic(sigma):
            term = term * q_int(u - 1)
        value = value + term
    return RationalFunction.from_laurent(value)


def fermionic_check(n: int, cap: int = DEFAULT_MLD_CAP) -> bool:
    """frak_beta(D_n) = fermionic_F(beta) for every beta |= n."""
    shuffle = shuffle_formula(n, cap)
    for beta in compositions_of(n):
        if frak_f(shuffle, beta) != fermionic_F(beta):
            logger.warning("fermionic_mismatch", n=n, beta=list(beta))
            return False
    return True


def oracle_check(n: int) -> bool:
    """fermionic_F at (n) and (1^n) against the q,t-Catalan and Hilbert series oracles."""
    if n < 1:
        return True
    result = fermionic_F((n,)) == qt_catalan(n) and fermionic_F((1,) * n) == hilbert_series(n)
    if not result:
        logger.warning("fermionic_oracle_mismatch", n=n)
    return result


def shuffle_theorem_check(
    n: int, cap: int = DEFAULT_MLD_CAP, nabla_cap: int = DEFAULT_NABLA_CAP
) -> bool:
    """nabla e_n = D_n as F-expansions."""
    expected = sym_to_qsym(nabla(e(n), cap=nabla_cap))
    result = shuffle_formula(n, cap) == expected
    if not result:
        logger.warning("shuffle_theorem_failed", n=n)
    return result
