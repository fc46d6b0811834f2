"""Named verification suites.

A suite builder turns the resolved caps into a list of independent checks. All
random draws happen while building, so a suite is fixed by its config and seed
no matter how the checks are later scheduled.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any

from macscifi.combinatorics.matrices import Matrix, matrices_of_total
from macscifi.combinatorics.partitions import Partition, corner_removals, partitions_of
from macscifi.nabla.ght import verify_ght
from macscifi.nabla.intersection import (
    f_coefficient_identity,
    verify_frak_shift,
    verify_leading_ones_vanish,
    verify_nabla_identity,
    verify_vanishing_all,
)
from macscifi.settings.state import ResolvedConfig
from macscifi.shuffle.appendix import (
    divided_difference_identity,
    lb_inclusion_exclusion_check,
    low_degree_vanishing_check,
    monomial_symmetric_sum_check,
    symmetric_combinations,
    symmetric_polynomial_check,
)
from macscifi.shuffle.fermionic import fermionic_check, oracle_check, shuffle_theorem_check
from macscifi.shuffle.involution import biword_check, phi_tilde_check, toward_lb_tilde_check
from macscifi.shuffle.lightning import (
    fib_reduction_check,
    lightning_bolt_check,
    lightning_bolt_vanishing_checks,
    lightning_bolt_z_check,
    stat_bar_closed_form_check,
    symmetry_check,
)
from macscifi.shuffle.mld import enumerate_mld, mld_generating_check, phi_check
from macscifi.specialization.kreweras import (
    PUBLISHED_ROWS,
    kreweras_table_check,
    n_factorial_over_k_check,
    verify_kreweras_theorem,
    verify_nabla_en_11,
    ward_check,
)
from macscifi.specialization.psi import psi_check

# Desk-scale ceilings that the caps cannot raise.
SHUFFLE_THEOREM_MAX_N = 5
MLD_MATRIX_MAX_TOTAL = 5
GHT_MAX_M = 2
GHT_MAX_N = 4
APPENDIX_RANDOM_MATRICES = 200
APPENDIX_SYMBOLIC_MAX_K = 4
SYMBOLIC_Z_MAX_K = 3


@dataclass(frozen=True)
class Check:
    id: str
    fn: Callable[[], bool]
    params: dict[str, Any] = field(default_factory=dict)


SuiteBuilder = Callable[[ResolvedConfig, random.Random], list[Check]]


def _label(mus: tuple[Partition, ...]) -> str:
    return ";".join(str(mu) for mu in mus)


def corner_tuples(max_size: int, max_k: int, min_k: int = 1) -> Iterator[tuple[Partition, ...]]:
    """Tuples of distinct corner removals of every mu with 2 <= |mu| <= max_size.

    A single partition sits under several mu; it is yielded once.
    """
    seen: set[tuple[Partition, ...]] = set()
    for size in range(2, max_size + 1):
        for mu in partitions_of(size):
            corners = corner_removals(mu)
            for k in range(min_k, min(max_k, len(corners)) + 1):
                for mus in combinations(corners, k):
                    if mus not in seen:
                        seen.add(mus)
                        yield mus


def _nonzero_columns(m: Matrix) -> bool:
    return bool(m) and all(any(row[j] for row in m) for j in range(len(m[0])))


def _intersection_checks(
    name: str,
    config: ResolvedConfig,
    min_k: int,
    fns: dict[str, Callable[[tuple[Partition, ...]], bool]],
) -> list[Check]:
    checks = []
    for mus in corner_tuples(config.max_n + 1, config.max_k, min_k):
        params = {"partitions": [list(mu) for mu in mus]}
        for tag, fn in fns.items():
            checks.append(
                Check(f"{name}.{tag}[{_label(mus)}]", lambda fn=fn, mus=mus: fn(mus), params)
            )
    return checks


def build_thm1a(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    cap = config.hhl_cap
    return _intersection_checks(
        "thm1a",
        config,
        2,
        {
            "vanishing": lambda mus: verify_vanishing_all(mus, cap=cap),
            "leading_ones": lambda mus: verify_leading_ones_vanish(mus, cap=cap),
        },
    )


def build_thm1b(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    cap, nabla_cap = config.hhl_cap, config.nabla_cap
    return _intersection_checks(
        "thm1b",
        config,
        1,
        {
            "nabla": lambda mus: verify_nabla_identity(mus, cap=cap, nabla_cap=nabla_cap),
            "frak_shift": lambda mus: verify_frak_shift(mus, cap=cap),
            "f_coefficient": lambda mus: f_coefficient_identity(
                mus, cap=cap, nabla_cap=nabla_cap
            ),
        },
    )


def build_thm1c(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    top = min(config.max_n, SHUFFLE_THEOREM_MAX_N, config.mld_cap)
    return [
        Check(
            f"thm1c[n={n}]",
            lambda n=n: shuffle_theorem_check(n, cap=config.mld_cap, nabla_cap=config.nabla_cap),
            {"n": n},
        )
        for n in range(1, top + 1)
    ]


def build_shuffle(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    checks = [
        Check(
            f"shuffle.count[n={n}]",
            lambda n=n: len(enumerate_mld(n, cap=config.mld_cap)) == (n + 1) ** (n - 1),
            {"n": n},
        )
        for n in range(1, min(config.max_n, config.mld_cap) + 1)
    ]
    largest = min(config.max_n, MLD_MATRIX_MAX_TOTAL)
    for rows, cols in product(range(1, 4), range(1, 4)):
        for size in range(1, largest + 1):
            for m in matrices_of_total(rows, cols, size):
                if not _nonzero_columns(m):
                    continue
                params = {"matrix": [list(row) for row in m]}
                checks.append(
                    Check(f"shuffle.area[{m}]", lambda m=m: mld_generating_check(m), params)
                )
                checks.append(Check(f"shuffle.phi[{m}]", lambda m=m: phi_check(m), params))
    return checks


def build_fermionic(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    checks = []
    for n in range(1, min(config.max_n, config.mld_cap) + 1):
        checks.append(
            Check(f"fermionic[n={n}]", lambda n=n: fermionic_check(n, cap=config.mld_cap), {"n": n})
        )
        checks.append(Check(f"fermionic.oracles[n={n}]", lambda n=n: oracle_check(n), {"n": n}))
    return checks


def _matrices_up_to(rows: int, cols: int, largest: int) -> Iterator[Matrix]:
    for r in range(1, rows + 1):
        for size in range(largest + 1):
            yield from matrices_of_total(r, cols, size)


def build_lightning(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    checks = []
    for k in range(2, config.max_k + 1):
        max_rows = 2 if k >= 4 else k
        randomized = config.z_mode == "randomized" or k > SYMBOLIC_Z_MAX_K
        mode = "randomized" if randomized else "symbolic"
        for rows in range(1, max_rows + 1):
            for m in matrices_of_total(rows, 2 * k - 1, k - 1):
                params = {"k": k, "matrix": [list(row) for row in m]}
                seed = rng.randrange(1 << 32)
                checks.append(
                    Check(
                        f"lightning[k={k},{m}]", lambda k=k, m=m: lightning_bolt_check(k, m), params
                    )
                )
                checks.append(
                    Check(
                        f"lightning.z[k={k},{m}]",
                        lambda k=k, m=m, seed=seed, mode=mode: lightning_bolt_z_check(
                            k,
                            m,
                            mode=mode,
                            trials=config.trials,
                            seed=seed,
                            sample_bits=config.sample_bits,
                        ),
                        {**params, "mode": mode, "seed": seed},
                    )
                )
                checks.append(
                    Check(
                        f"lightning.vanishing[k={k},{m}]",
                        lambda k=k, m=m: lightning_bolt_vanishing_checks(k, m),
                        params,
                    )
                )
        for m in _matrices_up_to(2, k - 1, k - 1):
            params = {"k": k, "matrix": [list(row) for row in m]}
            checks.append(
                Check(
                    f"lightning.closed_forms[k={k},{m}]",
                    lambda k=k, m=m: stat_bar_closed_form_check(k, m)
                    and fib_reduction_check(k, m)
                    and symmetry_check(k, m),
                    params,
                )
            )
    return checks


def build_tau(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    checks = []
    for k in range(2, config.max_k + 1):
        for m in _matrices_up_to(3, k - 1, k - 1):
            params = {"k": k, "matrix": [list(row) for row in m]}
            checks.append(
                Check(f"tau[k={k},{m}]", lambda k=k, m=m: toward_lb_tilde_check(k, m), params)
            )
            checks.append(
                Check(f"tau.biword[k={k},{m}]", lambda k=k, m=m: biword_check(k, m), params)
            )
            checks.append(Check(f"tau.phi_tilde[{m}]", lambda m=m: phi_tilde_check(m), params))
    return checks


def build_kreweras(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    cap = config.hhl_cap
    checks = _intersection_checks(
        "kreweras",
        config,
        1,
        {
            "h_expansion": lambda mus: verify_kreweras_theorem(mus, cap=cap),
            "n_factorial_over_k": lambda mus: n_factorial_over_k_check(mus, cap=cap),
        },
    )
    checks.extend(
        Check(f"kreweras.table[k={k}]", lambda k=k: kreweras_table_check(k), {"k": k})
        for k in sorted(PUBLISHED_ROWS)
    )
    for n in range(1, min(config.max_n, config.nabla_cap) + 1):
        checks.append(
            Check(
                f"kreweras.nabla_en[n={n}]",
                lambda n=n: verify_nabla_en_11(n, cap=config.nabla_cap),
                {"n": n},
            )
        )
        for lam in partitions_of(n):
            checks.append(
                Check(
                    f"kreweras.psi[{lam}]", lambda lam=lam: psi_check(lam), {"partition": list(lam)}
                )
            )
    return checks


def build_ward(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    return [
        Check(f"ward[n={n}]", lambda n=n: ward_check(n), {"n": n})
        for n in range(1, config.max_n + 1)
    ]


def build_ght(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    checks = []
    for n in range(1, min(config.max_n, GHT_MAX_N, config.nabla_cap) + 1):
        for m in range(0, min(GHT_MAX_M, n) + 1):
            for lam in partitions_of(m):
                for mu in partitions_of(n):
                    checks.append(
                        Check(
                            f"ght[lambda={lam},mu={mu}]",
                            lambda lam=lam, mu=mu: verify_ght(lam, mu, cap=config.nabla_cap),
                            {"lambda": list(lam), "mu": list(mu)},
                        )
                    )
    return checks


def _random_matrix(rng: random.Random) -> Matrix:
    rows, cols = rng.randint(1, 3), rng.randint(1, 4)
    return tuple(tuple(rng.randint(0, 3) for _ in range(cols)) for _ in range(rows))


def build_appendix(config: ResolvedConfig, rng: random.Random) -> list[Check]:
    matrices: list[Matrix] = []
    for rows, cols in product(range(1, 3), range(1, 4)):
        matrices.extend(
            tuple(tuple(entries[r * cols : (r + 1) * cols]) for r in range(rows))
            for entries in product(range(3), repeat=rows * cols)
        )
    matrices.extend(_random_matrix(rng) for _ in range(APPENDIX_RANDOM_MATRICES))
    checks = [
        Check(
            f"appendix.lb[{index}:{m}]",
            lambda m=m: lb_inclusion_exclusion_check(m),
            {"matrix": [list(row) for row in m]},
        )
        for index, m in enumerate(matrices)
    ]
    checks.extend(
        Check(f"appendix.divided[k={k}]", lambda k=k: divided_difference_identity(k), {"k": k})
        for k in range(2, config.max_k + 2)
    )
    for k in range(2, APPENDIX_SYMBOLIC_MAX_K + 1):
        checks.extend(
            Check(
                f"appendix.low_degree[k={k},d={d}]",
                lambda k=k, d=d: low_degree_vanishing_check(k, d),
                {"k": k, "degree": d},
            )
            for d in range(k - 1)
        )
        for size in range(k):
            checks.extend(
                Check(
                    f"appendix.monomial_sum[k={k},lambda={lam}]",
                    lambda k=k, lam=lam: monomial_symmetric_sum_check(k, lam),
                    {"k": k, "lambda": list(lam)},
                )
                for lam in partitions_of(size)
            )
            checks.extend(
                Check(
                    f"appendix.symmetric_sum[k={k},n={size},{index}]",
                    lambda k=k, f=f: symmetric_polynomial_check(k, f),
                    {"k": k, "degree": size, "poly": str(f)},
                )
                for index, f in enumerate(symmetric_combinations(k, size))
            )
    return checks


SUITES: dict[str, SuiteBuilder] = {
    "thm1a": build_thm1a,
    "thm1b": build_thm1b,
    "thm1c": build_thm1c,
    "shuffle": build_shuffle,
    "fermionic": build_fermionic,
    "lightning": build_lightning,
    "tau": build_tau,
    "kreweras": build_kreweras,
    "ward": build_ward,
    "ght": build_ght,
    "appendix": build_appendix,
}

ALL_SUITES = "all"


def suite_names() -> list[str]:
    return [*SUITES, ALL_SUITES]


def build_suite(name: str, config: ResolvedConfig, rng: random.Random) -> list[Check]:
    try:
        builder = SUITES[name]
    except KeyError as exc:
        raise ValueError(f"unknown suite {name!r}; expected one of {suite_names()}") from exc
    return builder(config, rng)
