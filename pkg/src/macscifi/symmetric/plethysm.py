"""Plethystic substitution into scalar alphabets and the X - epsilon shift."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import Partition

from .sym import SymExpansion, convert, e, scale_power_sums


@dataclass(frozen=True)
class Alphabet:
    """A scalar alphabet ``poly + eps * epsilon``.

    p_k[A] = poly with every variable raised to the k-th power, plus
    eps * (-1)^k for the epsilon part.
    """

    poly: LaurentPoly
    eps: Fraction = Fraction(0)

    def power_sum(self, k: int) -> LaurentPoly:
        value = self.poly.substitute_power(k)
        if self.eps:
            value = value + self.eps * (-1) ** k
        return value


@lru_cache(maxsize=None)
def m_weight(k: int) -> RationalFunction:
    """(1 - q^k)(1 - t^k), the plethystic image of M on p_k."""
    return RationalFunction.from_laurent(
        (1 - LaurentPoly.monomial(q=k)) * (1 - LaurentPoly.monomial(t=k))
    )


def plethystic_eval(f: SymExpansion, alphabet: Alphabet) -> RationalFunction:
    power = convert(f, "p")
    cache: dict[int, LaurentPoly] = {}
    total = RationalFunction.constant(0)
    for rho, coeff in power.items():
        value = LaurentPoly.constant(1)
        for part in rho:
            if part not in cache:
                cache[part] = alphabet.power_sum(part)
            value = value * cache[part]
        if not value.is_zero():
            total = total + coeff * RationalFunction.from_laurent(value)
    return total


def e_star(n: int) -> SymExpansion:
    """e_n[X/M] in the power-sum basis."""
    return scale_power_sums(e(n), lambda k: m_weight(k).inverse())


def minus_epsilon(f: SymExpansion) -> dict[int, SymExpansion]:
    """Graded pieces of f[X - epsilon], each in the power-sum basis.

    p_k[X - epsilon] = p_k - (-1)^k, so every p_rho splits over subsets of
    its parts.
    """
    power = convert(f, "p")
    pieces: dict[int, dict[Partition, RationalFunction]] = {}
    for rho, coeff in power.items():
        parts = list(rho)
        for size in range(len(parts) + 1):
            for kept in combinations(range(len(parts)), size):
                dropped = [parts[i] for i in range(len(parts)) if i not in kept]
                sign = 1
                for part in dropped:
                    sign *= -((-1) ** part)
                key = Partition(sorted((parts[i] for i in kept), reverse=True))
                degree = key.size
                bucket = pieces.setdefault(degree, {})
                term = coeff * sign
                bucket[key] = bucket[key] + term if key in bucket else term
    return {d: SymExpansion("p", d, terms) for d, terms in sorted(pieces.items())}
