"""The bijection Psi_lambda behind the h-expansion of D_n at q = t = 1.

A path pi = N^{h_0} E^{beta_1} N^{h_1} ... E^{beta_l} in Dyck(beta) together with a
lambda-brick tabloid (beta^(1), ..., beta^(l)) of shape beta maps to

    N^{h_0} P_{beta^(1)} N^{h_1} ... P_{beta^(l)},

where P_gamma = N E^{gamma_1 + 1} N E^{gamma_2 + 1} ... The image lies in Dyck(alpha) for
some rearrangement alpha of lambda + (1^{l(lambda)}), and the sets on both sides are
counted by Krew(lambda + (1^{l(lambda)})).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence

import structlog

from macscifi.combinatorics.counting import BrickTabloid, brick_tabloids, kreweras
from macscifi.combinatorics.dyck import alpha_of, from_runs, validate
from macscifi.combinatorics.partitions import (
    Composition,
    Partition,
    compositions_of,
    plus_ones,
)
from macscifi.exceptions import SizeMismatchError
from macscifi.symmetric.qsym import distinct_rearrangements

logger = structlog.get_logger(__name__)

PsiKey = tuple[str, BrickTabloid]


def runs(path: str) -> list[tuple[int, int]]:
    """Maximal (north, east) run pairs of a Dyck path."""
    validate(path)
    out: list[tuple[int, int]] = []
    north = east = 0
    for step in path:
        if step == "N":
            if east:
                out.append((north, east))
                north = east = 0
            north += 1
        else:
            east += 1
    if north or east:
        out.append((north, east))
    return out


def dyck_paths_with_runs(alpha: Sequence[int]) -> list[str]:
    """Dyck(alpha): Dyck paths whose east runs, in order, are alpha."""
    alpha = tuple(alpha)
    n = sum(alpha)
    out: list[str] = []

    def grow(index: int, north: int, east: int, acc: list[tuple[int, int]]) -> None:
        if index == len(alpha):
            if north == n:
                out.append(from_runs(acc))
            return
        after = east + alpha[index]
        for step in range(max(1, after - north), n - north + 1):
            if index == len(alpha) - 1 and north + step != n:
                continue
            acc.append((step, alpha[index]))
            grow(index + 1, north + step, after, acc)
            acc.pop()

    if n:
        grow(0, 0, 0, [])
    else:
        out.append("")
    return out


def p_block(gamma: Sequence[int]) -> str:
    return "".join("N" + "E" * (part + 1) for part in gamma)


def psi(path: str, tabloid: Sequence[Sequence[int]]) -> str:
    """Psi_lambda(pi, tabloid), lambda being read off the tabloid.

    Raises:
        SizeMismatchError: if the tabloid rows do not have sizes alpha(pi).
    """
    pairs = runs(path)
    sizes = tuple(sum(row) for row in tabloid)
    if sizes != tuple(east for _, east in pairs):
        raise SizeMismatchError(
            f"tabloid rows have sizes {list(sizes)}, path {path!r} has {list(alpha_of(path))}"
        )
    return "".join(
        "N" * north + p_block(row) for (north, _), row in zip(pairs, tabloid, strict=True)
    )


def psi_inverse(path: str, lam: Sequence[int]) -> PsiKey:
    """Replace each P_{beta^(i)} block by E^{beta_i}.

    Blocks start at the first north run and at every later north run of length
    at least two; north runs of length one continue the current block.

    Raises:
        SizeMismatchError: if ``path`` is not in the image of Psi_lambda.
    """
    pairs = runs(path)
    if not pairs or pairs[0][0] < 2 or any(east < 2 for _, east in pairs):
        raise SizeMismatchError(f"{path!r} is not an image of Psi")
    heights: list[int] = []
    rows: list[list[int]] = []
    for north, east in pairs:
        if north >= 2:
            heights.append(north - 1)
            rows.append([])
        rows[-1].append(east - 1)
    tabloid = tuple(Composition(row) for row in rows)
    if Counter(p for row in tabloid for p in row) != Counter(lam):
        raise SizeMismatchError(f"{path!r} does not carry a {list(lam)}-brick tabloid")
    original = from_runs([(h, sum(row)) for h, row in zip(heights, tabloid, strict=True)])
    return validate(original), tabloid


def psi_domain(lam: Sequence[int]) -> Iterator[PsiKey]:
    """Pairs (pi, tabloid), pi in Dyck(beta) and tabloid in B_{lambda, beta}, over beta |= n."""
    lam = Partition(lam)
    for beta in compositions_of(lam.size):
        tabloids = brick_tabloids(lam, beta)
        if not tabloids:
            continue
        for path in dyck_paths_with_runs(beta):
            for tabloid in tabloids:
                yield path, tabloid


def psi_codomain(lam: Sequence[int]) -> set[str]:
    """Union of Dyck(alpha) over rearrangements alpha of lambda + (1^{l(lambda)})."""
    return {
        path
        for alpha in distinct_rearrangements(plus_ones(lam))
        for path in dyck_paths_with_runs(alpha)
    }


def psi_bijection(lam: Sequence[int]) -> dict[PsiKey, str]:
    return {(path, tabloid): psi(path, tabloid) for path, tabloid in psi_domain(lam)}


def psi_check(lam: Sequence[int]) -> bool:
    """Psi_lambda is injective, onto the codomain, inverted by psi_inverse, and both
    sides have Krew(lambda + (1^l)) elements."""
    lam = Partition(lam)
    mapping = psi_bijection(lam)
    images = set(mapping.values())
    codomain = psi_codomain(lam)
    ok = len(images) == len(mapping) and images == codomain
    ok = ok and len(codomain) == kreweras(plus_ones(lam))
    if ok:
        for key, image in mapping.items():
            if psi_inverse(image, lam) != key:
                logger.warning("psi_round_trip_failed", partition=list(lam), path=image)
                return False
    else:
        logger.warning(
            "psi_not_bijective",
            partition=list(lam),
            domain=len(mapping),
            images=len(images),
            codomain=len(codomain),
        )
    return ok
