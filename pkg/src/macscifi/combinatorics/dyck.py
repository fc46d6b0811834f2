"""Dyck paths as words over {N, E} from (0,0) to (n,n) staying weakly above the diagonal."""

from __future__ import annotations

from functools import lru_cache

from macscifi.exceptions import NotADyckPathError

from .partitions import Composition


def validate(path: str) -> str:
    """Return ``path`` if it is a Dyck path, else raise NotADyckPathError."""
    height = 0
    for step in path:
        if step == "N":
            height += 1
        elif step == "E":
            height -= 1
        else:
            raise NotADyckPathError(f"unexpected step {step!r} in {path!r}")
        if height < 0:
            raise NotADyckPathError(f"{path!r} goes below the diagonal")
    if height != 0:
        raise NotADyckPathError(f"{path!r} does not end on the diagonal")
    return path


def size(path: str) -> int:
    return len(path) // 2


@lru_cache(maxsize=None)
def dyck_enumerate(n: int) -> tuple[str, ...]:
    """All Dyck paths of size n in lexicographic order (E < N)."""
    out: list[str] = []

    def grow(prefix: str, north: int, east: int) -> None:
        if north == n and east == n:
            out.append(prefix)
            return
        if east < north:
            grow(prefix + "E", north, east + 1)
        if north < n:
            grow(prefix + "N", north + 1, east)

    grow("", 0, 0)
    return tuple(sorted(out))


def alpha_of(path: str) -> Composition:
    """Lengths of the maximal runs of east steps, in order."""
    validate(path)
    return Composition(len(run) for run in path.split("N") if run)


def _north_before(path: str) -> list[int]:
    """H[x] = number of north steps before the (x+1)-th east step."""
    heights = []
    north = 0
    for step in path:
        if step == "N":
            north += 1
        else:
            heights.append(north)
    return heights


def bounce_vector(path: str) -> Composition:
    """Bounce block lengths from bottom to top.

    The bounce path goes north from (0,0) until it meets the start of an east
    step of the path, then east to the diagonal, and repeats.
    """
    validate(path)
    n = size(path)
    heights = _north_before(path)
    blocks = []
    x = 0
    while x < n:
        top = heights[x]
        blocks.append(top - x)
        x = top
    return Composition(blocks)


def bounce(path: str) -> int:
    return sum(i * part for i, part in enumerate(bounce_vector(path)))


def area(path: str) -> int:
    """Number of full cells between the path and the diagonal."""
    validate(path)
    total = 0
    north = 0
    east = 0
    for step in path:
        if step == "N":
            total += north - east
            north += 1
        else:
            east += 1
    return total


def from_runs(north_east: list[tuple[int, int]]) -> str:
    return "".join("N" * a + "E" * b for a, b in north_east)


def catalan(n: int) -> int:
    value = 1
    for i in range(n):
        value = value * 2 * (2 * i + 1) // (i + 2)
    return value
