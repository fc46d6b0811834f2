"""Labeled Dyck paths, fermionic formulas and the lightning bolt identities."""

from .appendix import (
    divided_difference_identity,
    eta_shift,
    lb_inclusion_exclusion_check,
    low_degree_vanishing_check,
    monomial_symmetric,
    monomial_symmetric_sum_check,
    symmetric_polynomial_check,
)
from .fermionic import (
    fermionic_check,
    fermionic_F,
    hilbert_series,
    oracle_check,
    qt_catalan,
    shuffle_theorem_check,
    u_statistic,
)
from .involution import (
    biword,
    biword_check,
    biword_pinv,
    biwords_of,
    is_valid_biword,
    phi_tilde,
    phi_tilde_check,
    tau,
    tau_check,
    tau_fixed_sum,
    toward_lb_tilde_check,
)
from .lightning import (
    fib_reduction_check,
    lightning_bolt_check,
    lightning_bolt_vanishing_checks,
    lightning_bolt_z_check,
    stat_bar_closed_form,
    stat_bar_closed_form_check,
    symmetry_check,
)
from .mld import (
    LabeledDyckPath,
    area_prime,
    enumerate_mld,
    intervals,
    mld_generating_check,
    mld_of_matrix,
    phi,
    phi_check,
    shuffle_formula,
)

__all__ = [
    "LabeledDyckPath",
    "area_prime",
    "biword",
    "biword_check",
    "biword_pinv",
    "biwords_of",
    "divided_difference_identity",
    "enumerate_mld",
    "eta_shift",
    "fermionic_F",
    "fermionic_check",
    "fib_reduction_check",
    "hilbert_series",
    "intervals",
    "is_valid_biword",
    "lb_inclusion_exclusion_check",
    "lightning_bolt_check",
    "lightning_bolt_vanishing_checks",
    "lightning_bolt_z_check",
    "low_degree_vanishing_check",
    "mld_generating_check",
    "mld_of_matrix",
    "monomial_symmetric",
    "monomial_symmetric_sum_check",
    "oracle_check",
    "phi",
    "phi_check",
    "phi_tilde",
    "phi_tilde_check",
    "qt_catalan",
    "shuffle_formula",
    "shuffle_theorem_check",
    "stat_bar_closed_form",
    "stat_bar_closed_form_check",
    "symmetric_polynomial_check",
    "symmetry_check",
    "tau",
    "tau_check",
    "tau_fixed_sum",
    "toward_lb_tilde_check",
    "u_statistic",
]
