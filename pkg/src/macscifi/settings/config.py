from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Protocol

from .state import ResolvedConfig


class _LoadDotenv(Protocol):
    def __call__(
        self,
        dotenv_path: str | os.PathLike[str] | None = None,
        stream: Any = None,
        verbose: bool = False,
        override: bool = False,
        interpolate: bool = True,
        encoding: str | None = "utf-8",
    ) -> bool: ...


try:
    from dotenv import load_dotenv as _dotenv_loader
except ImportError:  # pragma: no cover - python-dotenv is a declared dependency
    LOAD_DOTENV: _LoadDotenv | None = None
else:
    LOAD_DOTENV = _dotenv_loader

if LOAD_DOTENV is not None:
    LOAD_DOTENV()

DEFAULT_MAX_N = 6
DEFAULT_MAX_K = 3
DEFAULT_HHL_CAP = 8
DEFAULT_NABLA_CAP = 8
DEFAULT_MLD_CAP = 7
DEFAULT_SEED = 0
DEFAULT_TRIALS = 3
DEFAULT_Z_MODE = "symbolic"
DEFAULT_JOBS = 1
DEFAULT_REPORT_DIR = "reports"
DEFAULT_SAMPLE_BITS = 16

Z_MODES = ("symbolic", "randomized")


@dataclass(frozen=True)
class ConfigOverrides:
    max_n: int | None = None
    max_k: int | None = None
    hhl_cap: int | None = None
    nabla_cap: int | None = None
    mld_cap: int | None = None
    seed: int | None = None
    trials: int | None = None
    z_mode: str | None = None
    jobs: int | None = None
    report_dir: str | None = None


def _read_toml_config(path: Path) -> dict[str, str]:
    if not path.exists():
        return {}
    try:
        try:
            import tomllib
        except ImportError:  # Python < 3.11
            import tomli as tomllib

        raw = tomllib.loads(path.read_text(encoding="utf-8"))
    except Exception:
        return {}

    if not isinstance(raw, dict):
        return {}

    result: dict[str, str] = {}
    for key, value in raw.items():
        if isinstance(value, bool):
            continue
        if isinstance(value, str | int):
            result[key] = str(value)
    return result


def _config_path() -> Path:
    override = os.getenv("MACSCIFI_CLI_CONFIG")
    if override:
        return Path(override).expanduser()
    return Path("~/.config/macscifi/cli.toml").expanduser()


def _pick(flag: Any, key: str, file_values: dict[str, str]) -> str | None:
    if flag is not None:
        return str(flag)
    env_key = f"MACSCIFI_{key.upper()}"
    return os.getenv(env_key) or file_values.get(env_key) or file_values.get(key)


def _as_int(raw: str | None, default: int) -> int:
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        # validate_config reports it
        return -1


def resolve_config(overrides: ConfigOverrides | None = None) -> ResolvedConfig:
    chosen = overrides or ConfigOverrides()
    file_values = _read_toml_config(_config_path())

    z_mode = _pick(chosen.z_mode, "z_mode", file_values) or DEFAULT_Z_MODE
    report_dir = _pick(chosen.report_dir, "report_dir", file_values) or DEFAULT_REPORT_DIR

    return ResolvedConfig(
        max_n=_as_int(_pick(chosen.max_n, "max_n", file_values), DEFAULT_MAX_N),
        max_k=_as_int(_pick(chosen.max_k, "max_k", file_values), DEFAULT_MAX_K),
        hhl_cap=_as_int(_pick(chosen.hhl_cap, "hhl_cap", file_values), DEFAULT_HHL_CAP),
        nabla_cap=_as_int(_pick(chosen.nabla_cap, "nabla_cap", file_values), DEFAULT_NABLA_CAP),
        mld_cap=_as_int(_pick(chosen.mld_cap, "mld_cap", file_values), DEFAULT_MLD_CAP),
        seed=_as_int(_pick(chosen.seed, "seed", file_values), DEFAULT_SEED),
        trials=_as_int(_pick(chosen.trials, "trials", file_values), DEFAULT_TRIALS),
        z_mode=z_mode.strip().lower(),
        jobs=_as_int(_pick(chosen.jobs, "jobs", file_values), DEFAULT_JOBS),
        report_dir=report_dir,
        sample_bits=_as_int(_pick(None, "sample_bits", file_values), DEFAULT_SAMPLE_BITS),
    )


def validate_config(config: ResolvedConfig) -> list[str]:
    errors: list[str] = []
    for name in ("max_n", "max_k", "hhl_cap", "nabla_cap", "mld_cap"):
        if getattr(config, name) < 1:
            errors.append(f"MACSCIFI_{name.upper()} must be a positive integer")
    if config.trials < 1:
        errors.append("MACSCIFI_TRIALS must be a positive integer")
    if config.jobs < 1:
        errors.append("MACSCIFI_JOBS must be a positive integer")
    if config.seed < 0:
        errors.append("MACSCIFI_SEED must be a non-negative integer")
    if config.z_mode not in Z_MODES:
        errors.append(f"MACSCIFI_Z_MODE must be one of {', '.join(Z_MODES)}")
    if config.sample_bits < 16:
        errors.append("MACSCIFI_SAMPLE_BITS must be at least 16")
    if not config.report_dir:
        errors.append("MACSCIFI_REPORT_DIR must not be empty")
    return errors
