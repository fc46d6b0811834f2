from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from pathlib import Path

import structlog

from macscifi.exceptions import MacsciFiError
from macscifi.models import CheckRecord, VerifyReport
from macscifi.settings.state import SessionState

from .registry import ALL_SUITES, SUITES, Check, build_suite

logger = structlog.get_logger(__name__)


def run_check(check: Check) -> CheckRecord:
    """Run one check; domain errors count as failures with the message as witness."""
    start = time.perf_counter()
    witness: str | None = None
    try:
        passed = bool(check.fn())
    except MacsciFiError as exc:
        passed = False
        witness = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if not passed:
        witness = witness or f"identity failed for {check.params}"
        logger.warning("verify_check_failed", check=check.id, witness=witness)
    return CheckRecord(
        id=check.id, params=check.params, passed=passed, witness=witness, seconds=elapsed
    )


def run_suite(name: str, state: SessionState) -> VerifyReport:
    """Build and run one suite, fanning the checks out over ``config.jobs`` workers."""
    config = state.config
    start = time.perf_counter()
    checks = build_suite(name, config, state.rng)
    logger.info("verify_suite_started", suite=name, checks=len(checks), seed=config.seed)
    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as executor:
            records = list(executor.map(run_check, checks))
    else:
        records = [run_check(check) for check in checks]
    state.suites_run.append(name)
    report = VerifyReport(
        suite=name,
        seed=config.seed,
        config=asdict(config),
        checks=sorted(records, key=lambda record: record.id),
        wall_time=time.perf_counter() - start,
    )
    logger.info(
        "verify_suite_finished",
        suite=name,
        passed=report.passed,
        failures=len(report.failures),
        seed=config.seed,
    )
    return report


def run_suites(name: str, state: SessionState) -> list[VerifyReport]:
    names = list(SUITES) if name == ALL_SUITES else [name]
    return [run_suite(suite, state) for suite in names]


def write_report(report: VerifyReport, report_dir: str | Path) -> Path:
    target = Path(report_dir)
    target.mkdir(parents=True, exist_ok=True)
    path = target / f"{report.suite}.json"
    path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    return path
