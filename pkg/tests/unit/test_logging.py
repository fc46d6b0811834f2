import json
import logging

import pytest

from macscifi.exceptions import NotInVError
from macscifi.logging_config import configure_logging, get_logger
from macscifi.macdonald.diagram import Diagram, FilledDiagram
from macscifi.macdonald.moves import column_exchange


@pytest.fixture(autouse=True)
def restore_logging():
    yield
    configure_logging("WARNING")


def test_json_logs_go_to_stderr(capsys):
    configure_logging("info", json=True)
    get_logger("macscifi.test").info("intersection_built", terms=3)
    captured = capsys.readouterr()
    assert captured.out == ""
    event = json.loads(captured.err.strip().splitlines()[-1])
    assert event["event"] == "intersection_built"
    assert event["level"] == "info"
    assert event["terms"] == 3
    assert "timestamp" in event


def test_level_filters_events(capsys):
    configure_logging("warning", json=True)
    get_logger("macscifi.test").info("quiet_event")
    assert "quiet_event" not in capsys.readouterr().err


def test_level_defaults_to_env(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "ERROR")
    configure_logging()
    assert logging.getLogger().level == logging.ERROR


def test_unknown_level_falls_back_to_warning():
    configure_logging("chatty")
    assert logging.getLogger().level == logging.WARNING


def test_library_debug_events_follow_log_level(capsys, monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "WARNING")
    configure_logging()
    diagram = Diagram(((1, 3), (1, 2)))
    filled = FilledDiagram.constant(diagram, 2)
    with pytest.raises(NotInVError):
        column_exchange(filled, 1)
    captured = capsys.readouterr()
    assert "column_exchange_rejected" not in captured.out + captured.err
