"""Symmetric and quasisymmetric expansions, inner products and plethysm."""

from .inner import hall_inner, star_inner, star_inner_via_hall
from .plethysm import Alphabet, e_star, minus_epsilon, plethystic_eval
from .qsym import (
    QSymExpansion,
    en_perp,
    f_to_monomial,
    frak_f,
    inverse_descent_set,
    qsym_to_sym,
    sym_to_qsym,
)
from .sym import SymExpansion, convert, element, equal, multiply, omega, rev

__all__ = [
    "Alphabet",
    "QSymExpansion",
    "SymExpansion",
    "convert",
    "e_star",
    "element",
    "en_perp",
    "equal",
    "f_to_monomial",
    "frak_f",
    "hall_inner",
    "inverse_descent_set",
    "minus_epsilon",
    "multiply",
    "omega",
    "plethystic_eval",
    "qsym_to_sym",
    "rev",
    "star_inner",
    "star_inner_via_hall",
    "sym_to_qsym",
]
