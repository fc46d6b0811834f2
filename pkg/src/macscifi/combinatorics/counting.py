"""Kreweras numbers, brick tabloids, Stirling and Ward numbers."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from macscifi.exceptions import SizeMismatchError

from .partitions import Composition, Partition, compositions_of

BrickTabloid = tuple[Composition, ...]


def multinomial(parts: Sequence[int]) -> int:
    total = sum(parts)
    if any(p < 0 for p in parts):
        return 0
    return factorial(total) // prod(factorial(p) for p in parts)


def kreweras(lam: Partition) -> int:
    """Krew(lambda) = multinomial(n+1; n+1-l, m_1, ..., m_n) / (n+1)."""
    n = lam.size
    mults = list(lam.multiplicities().values())
    value = multinomial([n + 1 - len(lam), *mults])
    if value % (n + 1):
        raise ArithmeticError(f"Kreweras number of {tuple(lam)} is not an integer")
    return value // (n + 1)


def brick_tabloids(lam: Partition, alpha: Composition) -> list[BrickTabloid]:
    """lambda-brick tabloids of shape alpha.

    Tuples (alpha^(1), ..., alpha^(l)) with alpha^(i) a composition of alpha_i
    whose parts, taken together, are the parts of lambda.
    """
    if lam.size != alpha.size:
        raise SizeMismatchError(f"|{tuple(lam)}| != |{tuple(alpha)}|")
    out: list[BrickTabloid] = []

    def rows(target: int, remaining: Counter[int]) -> Iterator[tuple[Composition, Counter[int]]]:
        if target == 0:
            yield Composition(), remaining
            return
        for part in sorted(remaining):
            if part > target or remaining[part] == 0:
                continue
            rest = remaining.copy()
            rest[part] -= 1
            if rest[part] == 0:
                del rest[part]
            for tail, left in rows(target - part, rest):
                yield Composition((part, *tail)), left

    def place(index: int, remaining: Counter[int], acc: tuple[Composition, ...]) -> None:
        if index == len(alpha):
            if not remaining:
                out.append(acc)
            return
        for row, left in rows(alpha[index], remaining):
            place(index + 1, left, (*acc, row))

    place(0, Counter(lam), ())
    return out


def brick_tabloid_count(lam: Partition, alpha: Composition) -> int:
    return len(brick_tabloids(lam, alpha))


def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by the explicit alternating sum."""
    if k < 0 or n < 0:
        return 0
    total = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1))
    return total // factorial(k)


@lru_cache(maxsize=None)
def ward(n: int, k: int) -> int:
    """T(n,k) through Stirling numbers."""
    if k < 0 or k > n - 1 and n > 0:
        return 0
    return sum(
        (-1) ** (n - k - m) * comb(2 * n - k, n + m) * stirling2(n + m, m)
        for m in range(n - k + 1)
    )


def ward_tilde(n: int, k: int) -> Fraction:
    """(2n-k)!/(n-k)! times the sum over compositions of n with n-k parts of 1/prod (a_i+1)!."""
    if k < 0 or k > n:
        return Fraction(0)
    total = Fraction(0)
    for alpha in compositions_of(n):
        if len(alpha) == n - k:
            total += Fraction(1, prod(factorial(a + 1) for a in alpha))
    return Fraction(factorial(2 * n - k), factorial(n - k)) * total


def ward_numbers(n: int) -> dict[int, tuple[Fraction, int]]:
    """Row n of the table: k -> (tilde T(n,k), T(n,k)) for 0 <= k < n."""
    return {k: (ward_tilde(n, k), ward(n, k)) for k in range(n)}


def ward_alternating_sum(n: int) -> int:
    """Sum over k of (-1)^k T(n,k); equal to n!."""
    if n == 0:
        return 1
    return sum((-1) ** k * ward(n, k) for k in range(n))


def ward_recurrence_check(n: int) -> bool:
    """T(n,k) = (2n-1-k) T(n-1,k) + (n-k) T(n-1,k-1) for all 0 <= k < n."""
    if n < 2:
        return True
    return all(
        ward(n, k) == (2 * n - 1 - k) * ward(n - 1, k) + (n - k) * ward(n - 1, k - 1)
        for k in range(n)
    )
