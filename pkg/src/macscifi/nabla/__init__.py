"""The nabla operator and Macdonald intersection polynomials."""

from .expansion import from_htilde, htilde_matrix, mac_expand, nabla, nabla_inv, to_htilde
from .ght import (
    eperp_mac_closed_form,
    en_htilde_expansion,
    nabla_en_closed_form,
    pi_prime,
    star_pairing_check,
    verify_ght,
)
from .intersection import (
    common_shape,
    f_coefficient_identity,
    has_polynomial_coefficients,
    intersection_poly,
    t_intersection,
    validate_partitions,
    verify_frak_shift,
    verify_leading_ones_vanish,
    verify_nabla_identity,
    verify_vanishing,
    verify_vanishing_all,
)

__all__ = [
    "common_shape",
    "en_htilde_expansion",
    "eperp_mac_closed_form",
    "f_coefficient_identity",
    "from_htilde",
    "has_polynomial_coefficients",
    "htilde_matrix",
    "intersection_poly",
    "mac_expand",
    "nabla",
    "nabla_en_closed_form",
    "nabla_inv",
    "pi_prime",
    "star_pairing_check",
    "t_intersection",
    "to_htilde",
    "validate_partitions",
    "verify_frak_shift",
    "verify_ght",
    "verify_leading_ones_vanish",
    "verify_nabla_identity",
    "verify_vanishing",
    "verify_vanishing_all",
]
