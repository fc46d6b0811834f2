"""Shared fixtures for unit and theorem-level tests."""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from macscifi.algebra.rational import RationalFunction
from macscifi.logging_config import configure_logging
from macscifi.macdonald.diagram import FilledDiagram
from macscifi.macdonald.staircase import deformed_diagram
from macscifi.settings.config import resolve_config
from macscifi.settings.state import ResolvedConfig
from macscifi.shuffle.mld import LabeledDyckPath


@pytest.fixture(scope="session", autouse=True)
def structured_logging() -> None:
    """Route library events through the stdlib root logger at LOG_LEVEL."""
    configure_logging()


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep user config files and MACSCIFI_* variables out of every test."""
    for key in list(os.environ):
        if key.startswith("MACSCIFI_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("MACSCIFI_CLI_CONFIG", str(tmp_path / "missing-cli.toml"))


@pytest.fixture
def q() -> RationalFunction:
    return RationalFunction.variable("q")


@pytest.fixture
def t() -> RationalFunction:
    return RationalFunction.variable("t")


@pytest.fixture
def small_config(tmp_path: Path) -> ResolvedConfig:
    """Caps small enough for suites to finish in well under a second each."""
    base = resolve_config()
    return ResolvedConfig(
        max_n=2,
        max_k=2,
        hhl_cap=base.hhl_cap,
        nabla_cap=base.nabla_cap,
        mld_cap=base.mld_cap,
        seed=7,
        trials=1,
        z_mode="symbolic",
        jobs=1,
        report_dir=str(tmp_path / "reports"),
    )


@pytest.fixture
def example_mld() -> LabeledDyckPath:
    """The worked-example modified labeled Dyck path for M = [[1, 2], [2, 1]]."""
    return LabeledDyckPath("NNNENNENEEEE", (3, 2, 6, 5, 1, 4))


@pytest.fixture
def staircase_k4_i3() -> FilledDiagram:
    return deformed_diagram(4, 3)
