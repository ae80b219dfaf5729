"""Prints one pass/fail line per acceptance criterion after the run."""
from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_results: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _results.setdefault(int(m.group(1)), []).append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        outcomes = _results[n]
        ok = all(o == "passed" for _, o in outcomes)
        names = ", ".join(name for name, _ in outcomes)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {names}")
