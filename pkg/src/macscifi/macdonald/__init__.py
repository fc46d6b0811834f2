"""Modified and generalized Macdonald polynomials on filled diagrams."""

from .diagram import Diagram, FilledDiagram, generalized_macdonald, longest_word, stat
from .hhl import hhl_macdonald
from .moves import column_exchange, column_exchange_inv, cycling
from .staircase import (
    corner_removal,
    deformed_diagram,
    deformed_diagram_closed_form,
    deformed_diagram_constructive,
    deformed_diagram_z,
    longest_stat,
    longest_stat_closed_form,
    z_specialization,
)
from .tuples import (
    CellTuple,
    inverse_stat_bar_sum,
    op_tuples,
    op_tuples_of_type,
    pinv,
    pinv_exponent,
    stat_bar,
    stat_of_tuple,
    type_sum,
)

__all__ = [
    "CellTuple",
    "Diagram",
    "FilledDiagram",
    "column_exchange",
    "column_exchange_inv",
    "corner_removal",
    "cycling",
    "deformed_diagram",
    "deformed_diagram_closed_form",
    "deformed_diagram_constructive",
    "deformed_diagram_z",
    "generalized_macdonald",
    "hhl_macdonald",
    "inverse_stat_bar_sum",
    "longest_stat",
    "longest_stat_closed_form",
    "longest_word",
    "op_tuples",
    "op_tuples_of_type",
    "pinv",
    "pinv_exponent",
    "stat",
    "stat_bar",
    "stat_of_tuple",
    "type_sum",
    "z_specialization",
]
