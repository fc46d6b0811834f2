from importlib.metadata import PackageNotFoundError, version

from .algebra.laurent import LaurentPoly
from .algebra.rational import RationalFunction
from .combinatorics.partitions import Composition, Partition
from .exceptions import (
    AlgebraError,
    CapError,
    ExpansionError,
    FillingError,
    MacsciFiError,
    PoleAtPointError,
    ShapeError,
)
from .macdonald.hhl import hhl_macdonald
from .models import CheckRecord, ExpansionModel, VerifyReport
from .nabla.expansion import mac_expand, nabla
from .nabla.intersection import intersection_poly
from .shuffle.fermionic import fermionic_F
from .shuffle.mld import shuffle_formula
from .specialization.kreweras import kreweras_h_expansion, specialize_11
from .symmetric.qsym import QSymExpansion, qsym_to_sym, sym_to_qsym
from .symmetric.sym import SymExpansion, convert

try:
    __version__ = version("macscifi")
except PackageNotFoundError:  # pragma: no cover - source checkout without metadata
    __version__ = "0.0.0"

__all__ = [
    "__version__",
    # Types
    "Composition",
    "LaurentPoly",
    "Partition",
    "QSymExpansion",
    "RationalFunction",
    "SymExpansion",
    # Models
    "CheckRecord",
    "ExpansionModel",
    "VerifyReport",
    # Functions
    "convert",
    "fermionic_F",
    "hhl_macdonald",
    "intersection_poly",
    "kreweras_h_expansion",
    "mac_expand",
    "nabla",
    "qsym_to_sym",
    "shuffle_formula",
    "specialize_11",
    "sym_to_qsym",
    # Exceptions
    "AlgebraError",
    "CapError",
    "ExpansionError",
    "FillingError",
    "MacsciFiError",
    "PoleAtPointError",
    "ShapeError",
]
