"""Auxiliary identities: LB(M) from the tilde variant, and the divided-difference sums.

Divided-difference sums run over symbolic z_1..z_k and are compared after
clearing the common Vandermonde denominator, so every check is exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import permutations

import structlog

from macscifi.algebra.interpolation import divided_difference_check, lagrange_sum
from macscifi.algebra.laurent import LaurentPoly
from macscifi.combinatorics.counting import multinomial
from macscifi.combinatorics.matrices import as_matrix, inclusion_exclusion_lb, lb_laurent
from macscifi.combinatorics.partitions import Partition, compositions_of, partitions_of
from macscifi.exceptions import DegreeMismatchError, IndexOutOfRangeError, NotSymmetricError
from macscifi.macdonald.staircase import z_name

from .lightning import eta, z_laurent, z_points

logger = structlog.get_logger(__name__)


def lb_inclusion_exclusion_check(matrix: Sequence[Sequence[int]]) -> bool:
    """sum over E in Fib of (-1)^|E| q^{LB(M;E) - sum_{E_ij=1} M_ij} LB-tilde(M - E) = LB(M).

    Terms where M - E has a negative entry vanish.
    """
    m = as_matrix(matrix)
    if not m or not m[0]:
        return True
    result = inclusion_exclusion_lb(m) == lb_laurent(m)
    if not result:
        logger.warning("lb_inclusion_exclusion_failed", matrix=m)
    return result


def divided_difference_identity(k: int) -> bool:
    """sum_i z_i^d / prod_{j != i} (z_i - z_j) over z_1..z_k: 0 below d = k-1, 1 at d = k-1."""
    points = z_points(k)
    return all(divided_difference_check(points, d) for d in range(k))


def monomial_symmetric(lam: Sequence[int], count: int) -> LaurentPoly:
    """m_lambda[z_1, ..., z_count]; zero when lambda has more than ``count`` parts."""
    parts = tuple(p for p in lam if p > 0)
    if len(parts) > count:
        return LaurentPoly()
    padded = parts + (0,) * (count - len(parts))
    total = LaurentPoly()
    for exps in set(permutations(padded)):
        total = total + LaurentPoly.from_exponents(
            {z_name(j + 1): e for j, e in enumerate(exps) if e}
        )
    return total


def eta_shift(k: int, i: int, poly: LaurentPoly) -> LaurentPoly:
    """eta_{k,i} applied to a polynomial in z_1..z_{k-1}."""
    if not 1 <= i <= k:
        raise IndexOutOfRangeError(f"eta_{{{k},{i}}} needs 1 <= i <= {k}")
    return poly.substitute({z_name(j): z_laurent(eta(k, i, j)) for j in range(1, k)})


def eta_sum(k: int, poly: LaurentPoly, power: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(numerator, denominator) of sum_i z_i^power eta_{k,i}(poly) / prod_{j != i} (z_j - z_i)."""
    points = z_points(k)
    values = [points[i - 1] ** power * eta_shift(k, i, poly) for i in range(1, k + 1)]
    return lagrange_sum(points, values)


def low_degree_vanishing_check(k: int, degree: int) -> bool:
    """sum_i g_i / prod_{j != i} (z_j - z_i) = 0 for every basis family of degree < k - 1.

    The families are g_i = z_i^a eta_{k,i}(m_mu) with a + |mu| = degree, which agree
    whenever z_i = z_j.
    """
    if not 0 <= degree < k - 1:
        raise DegreeMismatchError(f"degree must lie in [0, {k - 2}], got {degree}")
    for a in range(degree + 1):
        for mu in partitions_of(degree - a):
            if len(mu) > k - 1:
                continue
            numerator, _ = eta_sum(k, monomial_symmetric(mu, k - 1), a)
            if not numerator.is_zero():
                logger.warning("low_degree_sum_nonzero", k=k, power=a, mu=list(mu))
                return False
    return True


def monomial_symmetric_sum_expected(k: int, lam: Partition) -> int:
    """(-1)^{k-1-l(lambda)} times the multinomial of the part multiplicities."""
    sign = -1 if (k - 1 - len(lam)) % 2 else 1
    return sign * multinomial(list(lam.multiplicities().values()))


def monomial_symmetric_sum_check(k: int, lam: Partition) -> bool:
    """sum_i z_i^{k-1-|lambda|} eta_{k,i}(m_lambda[z_1..z_{k-1}]) / prod_{j != i} (z_j - z_i)."""
    if lam.size > k - 1:
        raise DegreeMismatchError(f"|lambda| = {lam.size} exceeds k - 1 = {k - 1}")
    numerator, denominator = eta_sum(k, monomial_symmetric(lam, k - 1), k - 1 - lam.size)
    expected = monomial_symmetric_sum_expected(k, lam)
    result = numerator == denominator * expected
    if not result:
        logger.warning("monomial_symmetric_sum_failed", k=k, lam=list(lam), expected=expected)
    return result


def _homogeneous_degree(poly: LaurentPoly) -> int:
    degrees = {sum(exp for _, exp in mono) for mono, _ in poly}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"{poly} is not homogeneous")
    return degrees.pop() if degrees else 0


def _require_symmetric(poly: LaurentPoly, count: int) -> None:
    for j in range(1, count):
        swapped = poly.substitute({z_name(j): z_laurent(j + 1), z_name(j + 1): z_laurent(j)})
        if swapped != poly:
            raise NotSymmetricError(f"{poly} changes under z{j} <-> z{j + 1}")


def symmetric_sum_expected(k: int, poly: LaurentPoly, degree: int) -> Fraction:
    """(-1)^{k-1} sum over alpha |= degree of (-1)^{l(alpha)} [z^alpha] poly."""
    coefficients = {mono: coeff for mono, coeff in poly}
    total = Fraction(0)
    for alpha in compositions_of(degree):
        if len(alpha) > k - 1:
            continue
        mono = tuple((z_name(j + 1), e) for j, e in enumerate(alpha))
        total += (-1 if len(alpha) % 2 else 1) * coefficients.get(mono, Fraction(0))
    return -total if (k - 1) % 2 else total


def symmetric_polynomial_check(k: int, poly: LaurentPoly) -> bool:
    """sum_i z_i^{k-1-n} eta_{k,i}(f) / prod_{j != i} (z_j - z_i) for f symmetric in z_1..z_{k-1}.

    ``poly`` must be homogeneous of degree n <= k - 1 in z_1..z_{k-1}.
    """
    allowed = {z_name(j) for j in range(1, k)}
    stray = sorted({name for mono, _ in poly for name, _ in mono} - allowed)
    if stray:
        raise IndexOutOfRangeError(f"{poly} uses {stray} outside z1..z{k - 1}")
    degree = _homogeneous_degree(poly)
    if degree > k - 1:
        raise DegreeMismatchError(f"degree {degree} exceeds k - 1 = {k - 1}")
    _require_symmetric(poly, k - 1)
    numerator, denominator = eta_sum(k, poly, k - 1 - degree)
    expected = symmetric_sum_expected(k, poly, degree)
    result = numerator == denominator * expected
    if not result:
        logger.warning("symmetric_polynomial_sum_failed", k=k, poly=str(poly), expected=expected)
    return result


def symmetric_combinations(k: int, degree: int) -> list[LaurentPoly]:
    """Each m_lambda of one degree in z_1..z_{k-1}, a weighted sum and an alternating sum."""
    basis = [
        monomial_symmetric(lam, k - 1) for lam in partitions_of(degree) if len(lam) <= k - 1
    ]
    mixed = LaurentPoly()
    alternating = LaurentPoly()
    for index, m in enumerate(basis):
        mixed = mixed + m * (index + 1)
        alternating = alternating + m * (-1 if index % 2 else 1)
    return [*basis, mixed, alternating]
