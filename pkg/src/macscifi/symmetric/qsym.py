"""Quasisymmetric expansions in the fundamental (F) and monomial (M) bases."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

import structlog

from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import Composition, Partition, compositions_of
from macscifi.exceptions import NotSymmetricError

from .base import Expansion
from .sym import SymExpansion, convert

logger = structlog.get_logger(__name__)


class QSymExpansion(Expansion[Composition]):
    BASES = ("F", "M")

    @classmethod
    def _key(cls, key: tuple[int, ...]) -> Composition:
        return key if isinstance(key, Composition) else Composition(key)

    def sorted_keys(self) -> list[Composition]:
        return sorted(self._terms, reverse=True)

    @classmethod
    def from_laurent_terms(
        cls, basis: str, degree: int, terms: Mapping[Composition, LaurentPoly]
    ) -> QSymExpansion:
        return cls(basis, degree, {k: RationalFunction.from_laurent(v) for k, v in terms.items()})


def inverse_descent_set(word: Sequence[int]) -> frozenset[int]:
    """iDes(w) = {i : i+1 appears to the left of i}."""
    position = {value: index for index, value in enumerate(word)}
    return frozenset(i for i in range(1, len(word)) if position[i + 1] < position[i])


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def f_to_monomial(expansion: QSymExpansion) -> QSymExpansion:
    """F_alpha = sum of M_beta over refinements beta of alpha."""
    if expansion.basis == "M":
        return expansion
    out: dict[Composition, RationalFunction] = {}
    for alpha, coeff in expansion.items():
        for beta in alpha.refinements():
            out[beta] = out[beta] + coeff if beta in out else coeff
    return QSymExpansion("M", expansion.degree, out)


def monomial_to_f(expansion: QSymExpansion) -> QSymExpansion:
    """M_alpha = sum over refinements beta of (-1)^(l(beta)-l(alpha)) F_beta."""
    if expansion.basis == "F":
        return expansion
    out: dict[Composition, RationalFunction] = {}
    for alpha, coeff in expansion.items():
        for beta in alpha.refinements():
            term = coeff if (len(beta) - len(alpha)) % 2 == 0 else -coeff
            out[beta] = out[beta] + term if beta in out else term
    return QSymExpansion("F", expansion.degree, out)


def qsym_to_sym(expansion: QSymExpansion) -> SymExpansion:
    """Check symmetry and return the m-basis expansion.

    Raises:
        NotSymmetricError: with the first pair of compositions whose M
            coefficients differ although they sort to the same partition.
    """
    monomial = f_to_monomial(expansion)
    for alpha in compositions_of(expansion.degree):
        lam = alpha.sorted_partition()
        if monomial.coefficient(alpha) != monomial.coefficient(lam):
            logger.debug("qsym_not_symmetric", alpha=list(alpha), partition=list(lam))
            raise NotSymmetricError(
                f"coefficient of M{list(alpha)} differs from M{list(lam)}",
                witness=(alpha, Composition(lam)),
            )
    terms = {
        Partition(alpha): coeff
        for alpha, coeff in monomial.items()
        if all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))
    }
    return SymExpansion("m", expansion.degree, terms)


def sym_to_qsym(expansion: SymExpansion) -> QSymExpansion:
    """Expand a symmetric function in the F basis through m_lambda = sum of M_alpha."""
    monomial = convert(expansion, "m")
    out: dict[Composition, RationalFunction] = {}
    for lam, coeff in monomial.items():
        for alpha in distinct_rearrangements(lam):
            out[alpha] = coeff
    return monomial_to_f(QSymExpansion("M", monomial.degree, out))


def distinct_rearrangements(parts: Iterable[int]) -> list[Composition]:
    pool = sorted(parts)
    out: list[Composition] = []

    def grow(prefix: list[int], remaining: list[int]) -> None:
        if not remaining:
            out.append(Composition(prefix))
            return
        seen = set()
        for index, value in enumerate(remaining):
            if value in seen:
                continue
            seen.add(value)
            grow([*prefix, value], remaining[:index] + remaining[index + 1 :])

    grow([], pool)
    return out


def _minus_first(beta: Sequence[int]) -> Composition:
    """beta with one subtracted from its first part, dropping that part at zero."""
    head = beta[0] - 1
    return Composition((head, *beta[1:]) if head else beta[1:])


def en_perp(expansion: QSymExpansion, n: int) -> QSymExpansion:
    """E_n-perp on the F basis: F_alpha -> F_{beta-} when alpha = (1^(n-1), beta)."""
    if n < 1:
        raise ValueError("en_perp needs n >= 1")
    source = monomial_to_f(expansion)
    degree = source.degree - n
    if degree < 0:
        return QSymExpansion("F", 0)
    out: dict[Composition, RationalFunction] = {}
    for alpha, coeff in source.items():
        if len(alpha) < n or any(part != 1 for part in alpha[: n - 1]):
            continue
        target = _minus_first(alpha[n - 1 :])
        out[target] = out[target] + coeff if target in out else coeff
    return QSymExpansion("F", degree, out)


def frak_f(expansion: QSymExpansion, beta: Sequence[int]) -> RationalFunction:
    """Sum of [F_alpha] over alpha with [n-1] minus Set(beta) inside Set(alpha)."""
    source = monomial_to_f(expansion)
    n = source.degree
    beta_set = Composition(beta).descent_set()
    required = frozenset(range(1, n)) - beta_set
    total = RationalFunction.constant(0)
    for alpha, coeff in source.items():
        if required <= alpha.descent_set():
            total = total + coeff
    return total


def frak_f_of_descents(word: Sequence[int], beta: Sequence[int]) -> int:
    """1 exactly when every ascent of ``word`` lies in Set(beta)."""
    ascents = {i for i in range(1, len(word)) if word[i - 1] < word[i]}
    return int(ascents <= Composition(beta).descent_set())


def specialize_coefficients(
    expansion: QSymExpansion, bindings: Mapping[str, int | Fraction]
) -> QSymExpansion:
    return expansion.map_coefficients(lambda c: c.evaluate(bindings))
