import random
from dataclasses import replace

import pytest

from macscifi.exceptions import IndexOutOfRangeError
from macscifi.models import VerifyReport
from macscifi.settings.state import SessionState
from macscifi.verify.registry import (
    SUITES,
    Check,
    build_suite,
    corner_tuples,
    suite_names,
)
from macscifi.verify.runner import run_check, run_suite, run_suites, write_report


def test_suite_names_end_with_all():
    names = suite_names()
    assert names[-1] == "all"
    assert names[:3] == ["thm1a", "thm1b", "thm1c"]
    assert len(names) == len(SUITES) + 1


def test_build_suite_rejects_unknown_name(small_config):
    with pytest.raises(ValueError, match="unknown suite"):
        build_suite("nope", small_config, random.Random(0))


def test_corner_tuples():
    assert list(corner_tuples(2, 2)) == [((1,),)]
    assert list(corner_tuples(3, 2, 2)) == [((2,), (1, 1))]


@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_builds_checks(name, small_config):
    checks = build_suite(name, small_config, random.Random(small_config.seed))
    assert checks
    assert len({check.id for check in checks}) == len(checks)


def test_suites_are_fixed_by_seed(small_config):
    config = replace(small_config, z_mode="randomized")
    first = build_suite("lightning", config, random.Random(5))
    second = build_suite("lightning", config, random.Random(5))
    assert [(c.id, c.params) for c in first] == [(c.id, c.params) for c in second]


def test_run_check_records_failures():
    record = run_check(Check("broken", lambda: False, {"n": 2}))
    assert not record.passed
    assert record.witness == "identity failed for {'n': 2}"


def test_run_check_turns_domain_errors_into_witnesses():
    def explode():
        raise IndexOutOfRangeError("k out of range")

    record = run_check(Check("explodes", explode))
    assert not record.passed
    assert record.witness == "IndexOutOfRangeError: k out of range"


def test_run_check_passes():
    record = run_check(Check("fine", lambda: True))
    assert record.passed
    assert record.witness is None
    assert record.seconds >= 0


def test_run_suite(small_config):
    state = SessionState(config=small_config)
    report = run_suite("ward", state)
    assert report.passed
    assert report.seed == 7
    assert report.config["max_n"] == 2
    assert state.suites_run == ["ward"]
    assert [check.id for check in report.checks] == sorted(check.id for check in report.checks)


def test_run_suite_with_workers(small_config):
    state = SessionState(config=replace(small_config, jobs=2))
    report = run_suite("thm1a", state)
    assert report.passed
    assert len(report.checks) == 2


def test_run_suites_expands_all(mocker, small_config):
    mocker.patch("macscifi.verify.runner.run_suite", side_effect=lambda name, state: name)
    state = SessionState(config=small_config)
    assert run_suites("all", state) == list(SUITES)
    assert run_suites("ward", state) == ["ward"]


def test_write_report(tmp_path):
    report = VerifyReport(suite="ward", seed=0)
    path = write_report(report, tmp_path / "nested")
    assert path == tmp_path / "nested" / "ward.json"
    assert VerifyReport.model_validate_json(path.read_text(encoding="utf-8")) == report


def test_appendix_suite_covers_the_symmetric_sums(small_config):
    ids = [check.id for check in build_suite("appendix", small_config, random.Random(0))]
    prefixes = ("appendix.low_degree[k=4", "appendix.monomial_sum[k=4", "appendix.symmetric_sum")
    for prefix in prefixes:
        assert any(i.startswith(prefix) for i in ids)
