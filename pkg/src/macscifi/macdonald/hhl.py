"""Modified Macdonald polynomials through the combinatorial inv/maj formula."""

from __future__ import annotations

from functools import lru_cache

import structlog

from macscifi.combinatorics.partitions import Partition
from macscifi.exceptions import SizeCapExceededError
from macscifi.settings.config import DEFAULT_HHL_CAP
from macscifi.symmetric.qsym import QSymExpansion

from .diagram import FilledDiagram, macdonald_terms

logger = structlog.get_logger(__name__)


@lru_cache(maxsize=None)
def _hhl(mu: Partition) -> QSymExpansion:
    terms = macdonald_terms(FilledDiagram.standard(mu))
    logger.info("hhl_expansion_built", mu=list(mu), terms=len(terms))
    return QSymExpansion("F", mu.size, terms)


def hhl_macdonald(mu: Partition, cap: int = DEFAULT_HHL_CAP) -> QSymExpansion:
    """H~_mu = sum over w in S_n of q^inv t^maj F_iDes(w).

    Raises:
        SizeCapExceededError: when |mu| is larger than ``cap``.
    """
    mu = Partition(mu)
    if mu.size > cap:
        raise SizeCapExceededError(f"H~ of a partition of {mu.size} exceeds the cap {cap}")
    if mu.size == 0:
        return QSymExpansion.basis_element("F", (), 1)
    return _hhl(mu)
