"""Macdonald intersection polynomials and the identities they satisfy.

For distinct mu^(1), ..., mu^(k), each one cell short of a common mu |- n+1,

    I = sum_i prod_{j != i} T^(j) / (T^(j) - T^(i)) H~_{mu^(i)},

with T^(i) = T_{mu^(i)}. Coefficients are accumulated over the common
denominator prod_{i<j} (T^(j) - T^(i)) and normalized once per F-coefficient.
"""

from __future__ import annotations

from collections.abc import Sequence

import structlog

from macscifi.algebra.interpolation import lagrange_numerators, vandermonde
from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import (
    Composition,
    Partition,
    compositions_of,
    intersect,
    t_weight,
    t_weight_laurent,
    union,
)
from macscifi.exceptions import (
    DuplicatePartitionError,
    IndexOutOfRangeError,
    NotCoveredByCommonShapeError,
)
from macscifi.macdonald.hhl import hhl_macdonald
from macscifi.settings.config import DEFAULT_HHL_CAP, DEFAULT_NABLA_CAP
from macscifi.symmetric.qsym import QSymExpansion, en_perp, frak_f, qsym_to_sym, sym_to_qsym
from macscifi.symmetric.sym import e, equal

from .expansion import nabla

logger = structlog.get_logger(__name__)


def validate_partitions(mus: Sequence[Sequence[int]]) -> tuple[Partition, ...]:
    """Normalize and check a tuple of partitions for an intersection.

    Raises:
        DuplicatePartitionError: if two entries coincide.
        NotCoveredByCommonShapeError: if the entries are not all one cell
            short of a common partition.
    """
    parts = tuple(Partition(mu) for mu in mus)
    if not parts:
        raise NotCoveredByCommonShapeError("need at least one partition", partitions=parts)
    if len(set(parts)) != len(parts):
        raise DuplicatePartitionError(f"repeated partitions in {[list(p) for p in parts]}")
    n = parts[0].size
    if any(p.size != n for p in parts):
        raise NotCoveredByCommonShapeError("partitions have different sizes", partitions=parts)
    if len(parts) > 1 and union(*parts).size != n + 1:
        logger.debug("no_common_shape", partitions=[list(p) for p in parts])
        raise NotCoveredByCommonShapeError(
            f"{[list(p) for p in parts]} are not corner removals of one partition",
            partitions=parts,
        )
    return parts


def common_shape(mus: Sequence[Sequence[int]]) -> Partition:
    """The partition mu covering every entry; for a single entry, the entry with a cell on row 1."""
    parts = validate_partitions(mus)
    if len(parts) == 1:
        (only,) = parts
        return Partition((only[0] + 1, *only[1:])) if only else Partition((1,))
    return union(*parts)


def t_intersection(mus: Sequence[Sequence[int]]) -> RationalFunction:
    """T of the component-wise minimum of the partitions."""
    return t_weight(intersect(*validate_partitions(mus)))


def intersection_poly(
    mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP
) -> QSymExpansion:
    """The Macdonald intersection polynomial in the F basis."""
    parts = validate_partitions(mus)
    n = parts[0].size
    expansions = [hhl_macdonald(mu, cap=cap) for mu in parts]
    weights = [t_weight_laurent(mu) for mu in parts]
    numerators = lagrange_numerators(weights, scaled=True)
    denominator = vandermonde(weights)
    sums: dict[Composition, LaurentPoly] = {}
    for numerator, expansion in zip(numerators, expansions, strict=True):
        for alpha, coeff in expansion.items():
            term = numerator * coeff.to_laurent()
            sums[alpha] = sums[alpha] + term if alpha in sums else term
    terms = {
        alpha: RationalFunction.from_fraction(value, denominator)
        for alpha, value in sums.items()
        if not value.is_zero()
    }
    logger.info("intersection_built", partitions=[list(p) for p in parts], terms=len(terms))
    return QSymExpansion("F", n, terms)


def has_polynomial_coefficients(expansion: QSymExpansion) -> bool:
    return all(coeff.is_polynomial() for _, coeff in expansion.items())


def _perp(expansion: QSymExpansion, r: int) -> QSymExpansion:
    return en_perp(expansion, r) if r else expansion


def verify_vanishing(
    mus: Sequence[Sequence[int]], m: int, cap: int = DEFAULT_HHL_CAP
) -> bool:
    """e_{n-m}-perp I = 0 for m < k - 1."""
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    if not 0 <= m < k - 1:
        raise IndexOutOfRangeError(f"vanishing needs 0 <= m < k - 1 = {k - 1}, got {m}")
    result = _perp(intersection_poly(parts, cap=cap), n - m).is_zero()
    if not result:
        logger.warning("vanishing_failed", partitions=[list(p) for p in parts], m=m)
    return result


def verify_vanishing_all(mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP) -> bool:
    """Every m < k - 1; vacuously true for k = 1."""
    k = len(validate_partitions(mus))
    return all(verify_vanishing(mus, m, cap=cap) for m in range(k - 1))


def verify_nabla_identity(
    mus: Sequence[Sequence[int]],
    cap: int = DEFAULT_HHL_CAP,
    nabla_cap: int = DEFAULT_NABLA_CAP,
) -> bool:
    """e_{n+1-k}-perp I / T_cap = nabla e_{k-1}."""
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    reduced = _perp(intersection_poly(parts, cap=cap), n + 1 - k)
    scaled = reduced * t_intersection(parts).inverse()
    lhs = qsym_to_sym(scaled)
    rhs = nabla(e(k - 1), cap=nabla_cap)
    result = equal(lhs, rhs)
    if not result:
        logger.warning("nabla_identity_failed", partitions=[list(p) for p in parts])
    return result


def verify_frak_shift(mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP) -> bool:
    """frak_beta(e_{n+1-k}-perp I) = frak_{(n+1-k, beta)}(I) for every beta |= k - 1."""
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    full = intersection_poly(parts, cap=cap)
    reduced = _perp(full, n + 1 - k)
    for beta in compositions_of(k - 1):
        if frak_f(reduced, beta) != frak_f(full, (n + 1 - k, *beta)):
            logger.warning("frak_shift_failed", beta=list(beta))
            return False
    return True


def verify_leading_ones_vanish(
    mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP
) -> bool:
    """[F_alpha](I) = 0 whenever {1, ..., n+1-k} lies inside Set(alpha)."""
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    required = frozenset(range(1, n + 2 - k))
    for alpha, _ in intersection_poly(parts, cap=cap).items():
        if required <= alpha.descent_set():
            logger.warning("leading_ones_nonzero", alpha=list(alpha))
            return False
    return True


def f_coefficient_identity(
    mus: Sequence[Sequence[int]],
    cap: int = DEFAULT_HHL_CAP,
    nabla_cap: int = DEFAULT_NABLA_CAP,
) -> bool:
    """[F_{(1^{n-k}, alpha)}](I) = T_cap [F_{alpha-}](nabla e_{k-1}) for alpha |= k, alpha_1 > 1."""
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    if n < k:
        return True
    full = intersection_poly(parts, cap=cap)
    target = sym_to_qsym(nabla(e(k - 1), cap=nabla_cap))
    weight = t_intersection(parts)
    for alpha in compositions_of(k):
        if alpha[0] < 2:
            continue
        lhs = full.coefficient((*([1] * (n - k)), *alpha))
        rhs = weight * target.coefficient((alpha[0] - 1, *alpha[1:]))
        if lhs != rhs:
            logger.warning("f_coefficient_mismatch", alpha=list(alpha))
            return False
    return True
