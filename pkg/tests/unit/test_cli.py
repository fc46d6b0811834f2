from __future__ import annotations

import json
import random
from dataclasses import replace
from pathlib import Path

import pytest
from click.testing import CliRunner

from macscifi.cli import main
from macscifi.settings.config import ConfigOverrides, resolve_config, validate_config
from macscifi.settings.state import ResolvedConfig, SessionState
from macscifi.verify.registry import Check


def _write_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, lines: list[str]) -> None:
    config_file = tmp_path.joinpath("cli.toml")
    config_file.write_text("\n".join(lines), encoding="utf-8")
    monkeypatch.setenv("MACSCIFI_CLI_CONFIG", str(config_file))


def test_resolve_config_defaults() -> None:
    resolved = resolve_config()
    assert resolved.max_n == 6
    assert resolved.max_k == 3
    assert resolved.z_mode == "symbolic"
    assert resolved.jobs == 1
    assert resolved.sample_bits == 16
    assert validate_config(resolved) == []


def test_resolve_config_priority_flag_env_file(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> None:
    _write_config(
        tmp_path,
        monkeypatch,
        ["max_n = 3", "max_k = 2", "seed = 11", "MACSCIFI_TRIALS = 2", 'z_mode = "randomized"'],
    )
    monkeypatch.setenv("MACSCIFI_MAX_N", "4")
    monkeypatch.setenv("MACSCIFI_MAX_K", "5")

    resolved = resolve_config(ConfigOverrides(max_n=5))

    assert resolved.max_n == 5
    assert resolved.max_k == 5
    assert resolved.seed == 11
    assert resolved.trials == 2
    assert resolved.z_mode == "randomized"


def test_resolve_config_ignores_bools_and_bad_files(
    monkeypatch: pytest.MonkeyPatch, tmp_path: Path
) -> None:
    _write_config(tmp_path, monkeypatch, ["jobs = true"])
    assert resolve_config().jobs == 1
    _write_config(tmp_path, monkeypatch, ["this is not toml ="])
    assert resolve_config().max_n == 6


def test_resolve_config_normalizes_z_mode(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MACSCIFI_Z_MODE", " Randomized ")
    assert resolve_config().z_mode == "randomized"


def test_validate_config_reports_bad_values(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MACSCIFI_JOBS", "many")
    monkeypatch.setenv("MACSCIFI_Z_MODE", "numeric")
    monkeypatch.setenv("MACSCIFI_SAMPLE_BITS", "8")
    monkeypatch.setenv("MACSCIFI_SEED", "-3")

    errors = validate_config(resolve_config())

    assert "MACSCIFI_JOBS must be a positive integer" in errors
    assert "MACSCIFI_Z_MODE must be one of symbolic, randomized" in errors
    assert "MACSCIFI_SAMPLE_BITS must be at least 16" in errors
    assert "MACSCIFI_SEED must be a non-negative integer" in errors


def test_validate_config_checks_caps(small_config: ResolvedConfig) -> None:
    broken = replace(small_config, hhl_cap=0, report_dir="")
    errors = validate_config(broken)
    assert "MACSCIFI_HHL_CAP must be a positive integer" in errors
    assert "MACSCIFI_REPORT_DIR must not be empty" in errors


def test_session_state_seeds_its_rng(small_config: ResolvedConfig) -> None:
    state = SessionState(config=small_config)
    assert state.rng.random() == random.Random(small_config.seed).random()
    assert state.suites_run == []


def test_check_command_passes_with_defaults() -> None:
    result = CliRunner().invoke(main, ["check"])
    assert result.exit_code == 0
    assert "Configuration check passed." in result.output
    assert "max_n" in result.output


def test_check_command_reports_errors(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("MACSCIFI_JOBS", "0")
    result = CliRunner().invoke(main, ["check"])
    assert result.exit_code == 2
    assert "MACSCIFI_JOBS must be a positive integer" in result.output


def test_macdonald_command() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["macdonald", "--mu", "2"])
    assert result.exit_code == 0
    assert result.output.strip() == "F[2] + q*F[1,1]"

    result = runner.invoke(main, ["macdonald", "--mu", "2", "--basis", "s"])
    assert result.output.strip() == "q*s[1,1] + s[2]"


def test_macdonald_command_json() -> None:
    result = CliRunner().invoke(main, ["macdonald", "--mu", "1,1", "--format", "json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["basis"] == "F"
    assert payload["terms"][1] == {"index": [1, 1], "coefficient": "t"}


def test_macdonald_command_rejects_bad_partition() -> None:
    result = CliRunner().invoke(main, ["macdonald", "--mu", "1,2"])
    assert result.exit_code == 2


def test_intersection_command_by_corners() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["intersection", "--mu", "2,1", "--corners", "1,2"])
    assert result.exit_code == 0
    assert result.output.strip() == "F[2]"

    result = runner.invoke(
        main, ["intersection", "--mu", "2,1", "--corners", "1,2", "--specialize", "q=1,t=1"]
    )
    assert result.output.strip() == "h[2]"


def test_intersection_command_by_submus() -> None:
    result = CliRunner().invoke(main, ["intersection", "--submus", "2;1,1"])
    assert result.exit_code == 0
    assert result.output.strip() == "F[2]"


def test_intersection_command_partial_specialization() -> None:
    result = CliRunner().invoke(
        main, ["intersection", "--mu", "2,1", "--corners", "1", "--specialize", "q=2"]
    )
    assert result.exit_code == 0
    assert result.output.strip() == "F[2] + 2F[1,1]"


@pytest.mark.parametrize(
    ("bindings", "expected"),
    [
        ("t=1,q=1", "h[1,1]"),
        ("q=2/2,t=1", "h[1,1]"),
        ("q=2,t=2", "F[2] + 2F[1,1]"),
    ],
)
def test_intersection_command_h_basis_only_at_one_one(bindings: str, expected: str) -> None:
    result = CliRunner().invoke(
        main, ["intersection", "--mu", "2,1", "--corners", "1", "--specialize", bindings]
    )
    assert result.exit_code == 0
    assert result.output.strip() == expected


def test_intersection_help_explains_specialization() -> None:
    result = CliRunner().invoke(main, ["intersection", "--help"])
    assert "q=1,t=1 prints the h expansion" in " ".join(result.output.split())


@pytest.mark.parametrize(
    "args",
    [
        ["intersection", "--mu", "2,1", "--corners", "3"],
        ["intersection", "--mu", "2,1"],
        ["intersection", "--submus", "2;1,1", "--mu", "2,1"],
        ["intersection", "--submus", "2;2"],
        ["intersection", "--submus", "2;1,1", "--specialize", "q"],
    ],
)
def test_intersection_command_usage_errors(args: list[str]) -> None:
    result = CliRunner().invoke(main, args)
    assert result.exit_code == 2


def test_shuffle_command() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["shuffle", "--n", "2"])
    assert result.exit_code == 0
    assert result.output.strip() == "F[2] + (q + t)*F[1,1]"
    assert runner.invoke(main, ["shuffle", "--n=-1"]).exit_code == 2


def test_kreweras_command() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["kreweras", "--k", "3", "--n", "5"])
    assert result.exit_code == 0
    assert result.output.strip() == "2h[2,2,1] - h[3,1,1]"
    assert runner.invoke(main, ["kreweras", "--k", "4", "--n", "2"]).exit_code == 2


def test_verify_command_writes_report(tmp_path: Path) -> None:
    report_dir = tmp_path / "reports"
    result = CliRunner().invoke(
        main, ["--report-dir", str(report_dir), "verify", "ward", "--max-n", "3"]
    )
    assert result.exit_code == 0
    payload = json.loads(report_dir.joinpath("ward.json").read_text(encoding="utf-8"))
    assert payload["suite"] == "ward"
    assert payload["schema_version"] == 1
    assert [check["id"] for check in payload["checks"]] == ["ward[n=1]", "ward[n=2]", "ward[n=3]"]
    assert all(check["passed"] for check in payload["checks"])


def test_verify_command_exits_nonzero_on_failure(mocker, tmp_path: Path) -> None:
    mocker.patch(
        "macscifi.verify.runner.build_suite",
        return_value=[Check("ward.broken", lambda: False, {"n": 1})],
    )
    result = CliRunner().invoke(main, ["--report-dir", str(tmp_path), "verify", "ward"])
    assert result.exit_code == 1
    assert "FAIL ward.broken" in result.output
    assert tmp_path.joinpath("ward.json").exists()


def test_verify_command_validates_overrides(tmp_path: Path) -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["--report-dir", str(tmp_path), "verify", "ward", "--max-n", "0"])
    assert result.exit_code == 2
    assert "MACSCIFI_MAX_N must be a positive integer" in result.output
    assert runner.invoke(main, ["verify", "nonsense"]).exit_code == 2
    assert runner.invoke(main, ["verify", "ward", "--z-mode", "fast"]).exit_code == 2
