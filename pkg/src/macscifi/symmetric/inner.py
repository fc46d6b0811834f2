"""Hall and star inner products, computed in the power-sum basis."""

from __future__ import annotations

from macscifi.algebra.rational import RationalFunction
from macscifi.exceptions import DegreeMismatchError

from .plethysm import m_weight
from .sym import SymExpansion, convert, omega, scale_power_sums, z_rho


def _check_degrees(f: SymExpansion, g: SymExpansion) -> None:
    if f.degree != g.degree:
        raise DegreeMismatchError(f"inner product of degree {f.degree} with degree {g.degree}")


def hall_inner(f: SymExpansion, g: SymExpansion) -> RationalFunction:
    """<p_rho, p_nu> = z_rho when rho = nu, else 0."""
    _check_degrees(f, g)
    pf, pg = convert(f, "p"), convert(g, "p")
    total = RationalFunction.constant(0)
    for rho, a in pf.items():
        b = pg.terms.get(rho)
        if b is not None:
            total = total + a * b * z_rho(rho)
    return total


def star_pairing(rho: tuple[int, ...]) -> RationalFunction:
    """<p_rho, p_rho>_* = (-1)^(|rho| - l(rho)) z_rho prod (1 - q^rho_i)(1 - t^rho_i)."""
    sign = -1 if (sum(rho) - len(rho)) % 2 else 1
    value = RationalFunction.constant(sign * z_rho(rho))
    for part in rho:
        value = value * m_weight(part)
    return value


def star_inner(f: SymExpansion, g: SymExpansion) -> RationalFunction:
    _check_degrees(f, g)
    pf, pg = convert(f, "p"), convert(g, "p")
    total = RationalFunction.constant(0)
    for rho, a in pf.items():
        b = pg.terms.get(rho)
        if b is not None:
            total = total + a * b * star_pairing(rho)
    return total


def star_inner_via_hall(f: SymExpansion, g: SymExpansion) -> RationalFunction:
    """<f, g>_* as <f[MX], omega g>, M = (1-q)(1-t)."""
    _check_degrees(f, g)
    return hall_inner(scale_power_sums(f, m_weight), omega(g))
