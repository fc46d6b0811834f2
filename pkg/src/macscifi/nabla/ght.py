"""Closed forms built on the star inner product and Pi'_f.

Pi'_f = nabla^-1 f[X - epsilon], and for mu |- n >= m and f of degree m

    <e*_{n-m} f, H~_mu>_* = Pi'_f[D_mu].

Pairing with the H~ basis turns this into a closed form for e_{n-m}-perp of
H~_mu, and specializing f = e_n gives the classical expansion of nabla e_n.
"""

from __future__ import annotations

from functools import lru_cache

import structlog

from macscifi.algebra.rational import RationalFunction
from macscifi.combinatorics.partitions import (
    Partition,
    biexponent,
    d_alphabet,
    hook_products,
    partitions_of,
    pi_product,
    t_weight,
)
from macscifi.settings.config import DEFAULT_NABLA_CAP
from macscifi.symmetric.inner import star_inner
from macscifi.symmetric.plethysm import Alphabet, e_star, m_weight, minus_epsilon, plethystic_eval
from macscifi.symmetric.sym import SymExpansion, element, multiply, rev_coefficient

from .expansion import nabla_inv

logger = structlog.get_logger(__name__)

_QT = RationalFunction.variable("q") * RationalFunction.variable("t")


def pi_prime(f: SymExpansion, mu: Partition, cap: int = DEFAULT_NABLA_CAP) -> RationalFunction:
    """Pi'_f[D_mu], evaluated degree by degree."""
    alphabet = Alphabet(d_alphabet(Partition(mu)))
    total = RationalFunction.constant(0)
    for piece in minus_epsilon(f).values():
        if piece.is_zero():
            continue
        total = total + plethystic_eval(nabla_inv(piece, cap=cap), alphabet)
    return total


def star_pairing_check(f: SymExpansion, mu: Partition, cap: int = DEFAULT_NABLA_CAP) -> bool:
    """<e*_{n-m} f, H~_mu>_* = Pi'_f[D_mu] for a single f and mu."""
    mu = Partition(mu)
    rest = mu.size - f.degree
    if rest < 0:
        raise ValueError(f"degree {f.degree} exceeds |mu| = {mu.size}")
    left = multiply(e_star(rest), f) if rest else f
    lhs = star_inner(left, element("Htilde", tuple(mu)))
    rhs = pi_prime(f, mu, cap=cap)
    if lhs != rhs:
        logger.warning("star_pairing_mismatch", mu=list(mu), degree=f.degree)
    return lhs == rhs


def verify_ght(lam: Partition, mu: Partition, cap: int = DEFAULT_NABLA_CAP) -> bool:
    return star_pairing_check(element("Htilde", tuple(lam)), mu, cap=cap)


@lru_cache(maxsize=None)
def _hook_denominator(lam: Partition) -> RationalFunction:
    first, second = hook_products(lam)
    return first * second


def eperp_mac_closed_form(
    mu: Partition, m: int, cap: int = DEFAULT_NABLA_CAP
) -> SymExpansion:
    """e_{n-m}-perp H~_mu in the H~ basis of degree m.

    (qt)^m T_mu sum over lambda |- m of rev(Pi'_{H~_lambda}[D_mu]) T_lambda H~_lambda / (h h').
    """
    mu = Partition(mu)
    if not 0 <= m <= mu.size:
        raise ValueError(f"m must lie in [0, {mu.size}], got {m}")
    scale = _QT**m * t_weight(mu)
    terms: dict[Partition, RationalFunction] = {}
    for lam in partitions_of(m):
        pairing = pi_prime(element("Htilde", tuple(lam)), mu, cap=cap)
        terms[lam] = scale * rev_coefficient(pairing) * t_weight(lam) / _hook_denominator(lam)
    logger.debug("eperp_closed_form_built", mu=list(mu), m=m)
    return SymExpansion("Htilde", m, terms)


def en_htilde_expansion(n: int) -> SymExpansion:
    """e_n = sum over lambda of M Pi_lambda B_lambda H~_lambda / (h h')."""
    weight = m_weight(1)
    return SymExpansion(
        "Htilde",
        n,
        {
            lam: weight * pi_product(lam) * biexponent(lam) / _hook_denominator(lam)
            for lam in partitions_of(n)
        },
    )


def nabla_en_closed_form(n: int) -> SymExpansion:
    """nabla e_n = sum over lambda of M Pi_lambda B_lambda T_lambda H~_lambda / (h h')."""
    base = en_htilde_expansion(n)
    return SymExpansion("Htilde", n, {lam: c * t_weight(lam) for lam, c in base.items()})
