"""Partitions, compositions, Dyck paths, integer matrices and counting sequences."""

from .counting import (
    brick_tabloid_count,
    brick_tabloids,
    kreweras,
    multinomial,
    stirling2,
    ward,
    ward_alternating_sum,
    ward_numbers,
    ward_recurrence_check,
    ward_tilde,
)
from .dyck import alpha_of, area, bounce, bounce_vector, catalan, dyck_enumerate
from .matrices import (
    Matrix,
    csum,
    fibonacci_matrices,
    lb,
    lb_at,
    lb_tilde,
    llb_set,
    matrices_of_total,
    matrices_with_margins,
    rsum,
)
from .partitions import (
    Cell,
    Composition,
    Partition,
    arm,
    augmented_staircase,
    biexponent,
    coarm,
    coleg,
    compositions_of,
    d_alphabet,
    intersect,
    leg,
    partitions_of,
    plus_ones,
    removable_corners,
    remove_cell,
    t_weight,
)

__all__ = [
    "Cell",
    "Composition",
    "Matrix",
    "Partition",
    "alpha_of",
    "area",
    "arm",
    "augmented_staircase",
    "biexponent",
    "bounce",
    "bounce_vector",
    "brick_tabloid_count",
    "brick_tabloids",
    "catalan",
    "coarm",
    "coleg",
    "compositions_of",
    "csum",
    "d_alphabet",
    "dyck_enumerate",
    "fibonacci_matrices",
    "intersect",
    "kreweras",
    "lb",
    "lb_at",
    "lb_tilde",
    "leg",
    "llb_set",
    "matrices_of_total",
    "matrices_with_margins",
    "multinomial",
    "partitions_of",
    "plus_ones",
    "removable_corners",
    "remove_cell",
    "rsum",
    "stirling2",
    "t_weight",
    "ward",
    "ward_alternating_sum",
    "ward_numbers",
    "ward_recurrence_check",
    "ward_tilde",
]
