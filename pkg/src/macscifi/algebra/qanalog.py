"""q-integers, q-factorials, Gaussian binomials and q-multinomials."""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

from .laurent import ONE, ZERO, LaurentPoly


@lru_cache(maxsize=None)
def q_int(n: int, var: str = "q") -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q-integers are defined for n >= 0")
    return LaurentPoly({((var, i),) if i else (): 1 for i in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, var: str = "q") -> LaurentPoly:
    result = ONE
    for i in range(1, n + 1):
        result = result * q_int(i, var)
    return result


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int, var: str = "q") -> LaurentPoly:
    """Gaussian binomial by q-Pascal.

    ``(a choose 0)_q`` is 1 for every a, including a = -1; ``(a choose b)_q``
    is 0 when b < 0 or b > a.
    """
    if b == 0:
        return ONE
    if b < 0 or b > a:
        return ZERO
    if b == a:
        return ONE
    shift = LaurentPoly({((var, b),): 1})
    return q_binomial(a - 1, b - 1, var) + shift * q_binomial(a - 1, b, var)


def q_multinomial(parts: Sequence[int], var: str = "q") -> LaurentPoly:
    """(sum parts; parts)_q as a product of Gaussian binomials."""
    result = ONE
    running = 0
    for part in parts:
        if part < 0:
            return ZERO
        running += part
        result = result * q_binomial(running, part, var)
    return result


def qpow(exponent: int, var: str = "q") -> LaurentPoly:
    return LaurentPoly({((var, exponent),) if exponent else (): 1})
