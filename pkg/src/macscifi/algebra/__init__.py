"""Exact arithmetic: Laurent polynomials, rational functions, q-analogs, linear solving."""

from .laurent import LaurentPoly
from .linalg import invert, solve_linear
from .qanalog import q_binomial, q_factorial, q_int, q_multinomial
from .rational import (
    RationalFunction,
    constant,
    evaluate,
    from_fraction,
    normalize,
    parse_rational,
    variable,
)

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "constant",
    "evaluate",
    "from_fraction",
    "invert",
    "normalize",
    "parse_rational",
    "q_binomial",
    "q_factorial",
    "q_int",
    "q_multinomial",
    "solve_linear",
    "variable",
]
