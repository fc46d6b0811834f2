"""The q = t = 1 specialization and the Kreweras h-expansion of intersection polynomials.

At q = t = 1 every H~_mu becomes h_{1^n}, yet the intersection polynomial has a
nontrivial limit because its coefficients have poles on q = t = 1 before
cancellation. Coefficients are reduced fractions, so evaluation happens after
cancellation.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import factorial, prod
from typing import Any, TypeVar

import structlog

from macscifi.combinatorics.counting import (
    kreweras,
    multinomial,
    ward,
    ward_alternating_sum,
    ward_recurrence_check,
    ward_tilde,
)
from macscifi.combinatorics.partitions import Partition, partitions_of, plus_ones
from macscifi.exceptions import IndexOutOfRangeError, PoleAtPointError
from macscifi.nabla.expansion import nabla
from macscifi.nabla.intersection import intersection_poly, validate_partitions
from macscifi.settings.config import DEFAULT_HHL_CAP, DEFAULT_NABLA_CAP
from macscifi.symmetric.base import Expansion
from macscifi.symmetric.qsym import distinct_rearrangements, qsym_to_sym
from macscifi.symmetric.sym import SymExpansion, convert, e, equal

logger = structlog.get_logger(__name__)

E = TypeVar("E", bound=Expansion[Any])

ONE_ONE = {"q": 1, "t": 1}


def specialize_11(expansion: E) -> E:
    """Evaluate every coefficient at q = t = 1.

    Raises:
        PoleAtPointError: if a reduced coefficient still has a pole there; the
            error carries the basis index of that coefficient.
    """
    out = {}
    for key, coeff in expansion.items():
        try:
            out[key] = coeff.evaluate(ONE_ONE)
        except PoleAtPointError as exc:
            raise PoleAtPointError(
                f"coefficient of {expansion.basis}{list(key)} has a pole at q=t=1",
                point=exc.point,
                index=key,
            ) from exc
    return type(expansion)(expansion.basis, expansion.degree, out)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def kreweras_h_expansion(k: int, n: int) -> SymExpansion:
    """sum over lambda |- k-1 of (-1)^{k-1-l(lambda)} Krew(lambda + 1^l) h_{lambda + 1^{n+1-k}}.

    Raises:
        IndexOutOfRangeError: unless 1 <= k and k - 1 <= n.
    """
    if k < 1 or k - 1 > n:
        raise IndexOutOfRangeError(f"need 1 <= k and k - 1 <= n, got k={k}, n={n}")
    terms = {
        plus_ones(lam, n + 1 - k): _sign(k - 1 - len(lam)) * kreweras(plus_ones(lam))
        for lam in partitions_of(k - 1)
    }
    return SymExpansion("h", n, terms)


# Published rows of I[X;1,1], trailing ones dropped from each h index.
PUBLISHED_ROWS: dict[int, dict[tuple[int, ...], int]] = {
    2: {(2,): 1},
    3: {(2, 2): 2, (3,): -1},
    4: {(2, 2, 2): 5, (3, 2): -5, (4,): 1},
    5: {(2, 2, 2, 2): 14, (3, 2, 2): -21, (3, 3): 3, (4, 2): 6, (5,): -1},
    6: {
        (2, 2, 2, 2, 2): 42,
        (3, 2, 2, 2): -84,
        (3, 3, 2): 28,
        (4, 2, 2): 28,
        (4, 3): -7,
        (5, 2): -7,
        (6,): 1,
    },
}


def _strip_ones(parts: Sequence[int]) -> tuple[int, ...]:
    end = len(parts)
    while end and parts[end - 1] == 1:
        end -= 1
    return tuple(parts[:end])


def kreweras_table_check(k: int) -> bool:
    """The h-expansion formula against the published row for k.

    A mismatch is logged with both sides rather than resolved in favour of either.

    Raises:
        IndexOutOfRangeError: unless 2 <= k <= 6.
    """
    if k not in PUBLISHED_ROWS:
        raise IndexOutOfRangeError(f"published rows cover 2 <= k <= 6, got k={k}")
    derived = {
        _strip_ones(lam): coeff for lam, coeff in kreweras_h_expansion(k, 2 * k - 2).items()
    }
    published = PUBLISHED_ROWS[k]
    result = derived.keys() == published.keys() and all(
        derived[key] == value for key, value in published.items()
    )
    if not result:
        logger.warning(
            "kreweras_table_mismatch",
            k=k,
            derived={str(key): str(value) for key, value in derived.items()},
            published={str(key): value for key, value in published.items()},
        )
    return result


def intersection_at_11(mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP) -> SymExpansion:
    """I[X;1,1] in the h basis, by exact conversion."""
    specialized = specialize_11(intersection_poly(mus, cap=cap))
    return convert(qsym_to_sym(specialized), "h")


def verify_kreweras_theorem(mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP) -> bool:
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    lhs = intersection_at_11(parts, cap=cap)
    rhs = kreweras_h_expansion(k, n)
    result = lhs == rhs
    if not result:
        logger.warning(
            "kreweras_mismatch",
            partitions=[list(p) for p in parts],
            computed=str(lhs),
            expected=str(rhs),
        )
    return result


def nabla_en_11_h_expansion(n: int) -> SymExpansion:
    """sum over lambda |- n of (-1)^{n-l(lambda)} Krew(lambda + 1^l) h_lambda."""
    return SymExpansion(
        "h",
        n,
        {lam: _sign(n - len(lam)) * kreweras(plus_ones(lam)) for lam in partitions_of(n)},
    )


def nabla_en_11_e_expansion(n: int) -> SymExpansion:
    return SymExpansion("e", n, {lam: kreweras(lam) for lam in partitions_of(n)})


def verify_nabla_en_11(n: int, cap: int = DEFAULT_NABLA_CAP) -> bool:
    """nabla e_n at q = t = 1 against both Kreweras expansions."""
    computed = specialize_11(nabla(e(n), cap=cap))
    expected = nabla_en_11_h_expansion(n)
    checks = {
        "h_expansion": equal(computed, expected),
        "e_expansion": equal(nabla_en_11_e_expansion(n), expected),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning("nabla_en_11_failed", n=n, failed=failed)
    return not failed


def pair_with_e1n(expansion: SymExpansion) -> Fraction:
    """<f, e_{1^n}>, using <h_lambda, e_{1^n}> = n! / prod lambda_i!."""
    h_form = convert(expansion, "h")
    return sum(
        (coeff.to_fraction() * multinomial(lam) for lam, coeff in h_form.items()),
        Fraction(0),
    )


def redistribution_holds(lam: Partition, k: int, n: int) -> bool:
    """Krew(lambda + 1^l) times the multinomial of lambda + 1^{n+1-k}, spread over the
    rearrangements alpha of lambda as n!/k! (k-1+l)! / (l! prod (alpha_i + 1)!)."""
    ell = len(lam)
    lhs = kreweras(plus_ones(lam)) * multinomial(plus_ones(lam, n + 1 - k))
    share = Fraction(factorial(k - 1 + ell), factorial(ell))
    rhs = Fraction(factorial(n), factorial(k)) * sum(
        (
            share / prod(factorial(a + 1) for a in alpha)
            for alpha in distinct_rearrangements(lam)
        ),
        Fraction(0),
    )
    return lhs == rhs


def ward_route(k: int, n: int) -> Fraction:
    """n!/k! times sum over m of (-1)^m tilde T(k-1, m)."""
    if k == 1:
        return Fraction(factorial(n))
    alternating = sum(
        ((-1) ** m * ward_tilde(k - 1, m) for m in range(k - 1)), Fraction(0)
    )
    return Fraction(factorial(n), factorial(k)) * alternating


def n_factorial_over_k_check(
    mus: Sequence[Sequence[int]], cap: int = DEFAULT_HHL_CAP
) -> bool:
    """<I[X;1,1], e_{1^n}> = n!/k by the multinomial pairing and by the Ward numbers."""
    parts = validate_partitions(mus)
    k, n = len(parts), parts[0].size
    target = Fraction(factorial(n), k)
    direct = pair_with_e1n(intersection_at_11(parts, cap=cap))
    checks = {
        "pairing": direct == target,
        "redistribution": all(redistribution_holds(lam, k, n) for lam in partitions_of(k - 1)),
        "ward": ward_route(k, n) == target,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning(
            "n_factorial_over_k_failed",
            partitions=[list(p) for p in parts],
            failed=failed,
            pairing=str(direct),
        )
    return not failed


def ward_check(n: int) -> bool:
    """tilde T = T, the Ward recurrence, and the alternating sum n!."""
    checks = {
        "tilde": all(ward_tilde(n, k) == ward(n, k) for k in range(n)),
        "recurrence": ward_recurrence_check(n),
        "alternating": ward_alternating_sum(n) == factorial(n),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning("ward_check_failed", n=n, failed=failed)
    return not failed
