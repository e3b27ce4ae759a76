"""Tests of log module
"""

import json
import logging

from windschitl.log import bind_logger_contextvars, clear_logger_contextvars
from windschitl.reference import gamma_enclosure


def events(caplog):
    return [json.loads(r.getMessage()) for r in caplog.records if r.name == "windschitl.reference"]


def test_operation_is_logged(caplog):
    caplog.set_level(logging.DEBUG, logger="windschitl.reference")
    gamma_enclosure(5, "1e-20", 128)
    enter, leave = [e for e in events(caplog) if e["event"].endswith("operation")]
    assert enter["event"] == "Enter operation"
    assert enter["operation"] == "gamma_enclosure"
    assert enter["parameters"]["precision_bits"] == "128"
    assert leave["event"] == "Exit operation"
    assert set(leave["result"]) == {"shift", "terms"}


def test_contextvars_are_merged(caplog):
    caplog.set_level(logging.DEBUG, logger="windschitl.reference")
    bind_logger_contextvars(command="gamma")
    try:
        gamma_enclosure(3, "1e-10", 128)
    finally:
        clear_logger_contextvars()
    assert all(e["command"] == "gamma" for e in events(caplog))


def test_quiet_by_default(caplog):
    caplog.set_level(logging.WARNING, logger="windschitl.reference")
    gamma_enclosure(3, "1e-10", 128)
    assert events(caplog) == []
