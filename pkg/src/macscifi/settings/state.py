from __future__ import annotations

import random
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ResolvedConfig:
    max_n: int
    max_k: int
    hhl_cap: int
    nabla_cap: int
    mld_cap: int
    seed: int
    trials: int
    z_mode: str
    jobs: int
    report_dir: str
    sample_bits: int = 16


@dataclass
class SessionState:
    """Per-invocation state: the resolved config and the rng seeded from it."""

    config: ResolvedConfig
    rng: random.Random = field(default_factory=random.Random)
    suites_run: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.rng.seed(self.config.seed)
