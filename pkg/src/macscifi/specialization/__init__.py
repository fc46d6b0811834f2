"""The q = t = 1 specialization, Kreweras expansions and the Psi bijection."""

from .kreweras import (
    intersection_at_11,
    kreweras_h_expansion,
    kreweras_table_check,
    n_factorial_over_k_check,
    nabla_en_11_e_expansion,
    nabla_en_11_h_expansion,
    pair_with_e1n,
    specialize_11,
    verify_kreweras_theorem,
    verify_nabla_en_11,
    ward_check,
    ward_route,
)
from .psi import dyck_paths_with_runs, psi, psi_bijection, psi_check, psi_inverse

__all__ = [
    "dyck_paths_with_runs",
    "intersection_at_11",
    "kreweras_h_expansion",
    "kreweras_table_check",
    "n_factorial_over_k_check",
    "nabla_en_11_e_expansion",
    "nabla_en_11_h_expansion",
    "pair_with_e1n",
    "psi",
    "psi_bijection",
    "psi_check",
    "psi_inverse",
    "specialize_11",
    "verify_kreweras_theorem",
    "verify_nabla_en_11",
    "ward_check",
    "ward_route",
]
