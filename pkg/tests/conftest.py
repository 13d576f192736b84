"""Shared fixtures and the acceptance summary printed after the run."""

from __future__ import annotations

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    doc = _LABELS.get(report.nodeid, report.nodeid.split("::")[-1])
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid] = (report.outcome, doc)


_LABELS: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        doc = getattr(item.function, "__doc__", None)
        if doc and "test_acceptance.py" in item.nodeid:
            _LABELS[item.nodeid] = doc.strip().splitlines()[0]


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (outcome, label) in _ACCEPTANCE.items():
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")


@pytest.fixture
def cauchy_x():
    import numpy as np

    return np.linspace(-20.0, 20.0, 100)
