"""Verification suites and the runner that turns them into reports."""

from .registry import ALL_SUITES, SUITES, Check, build_suite, corner_tuples, suite_names
from .runner import run_check, run_suite, run_suites, write_report

__all__ = [
    "ALL_SUITES",
    "SUITES",
    "Check",
    "build_suite",
    "corner_tuples",
    "run_check",
    "run_suite",
    "run_suites",
    "suite_names",
    "write_report",
]
