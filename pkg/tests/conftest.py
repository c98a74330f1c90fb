"""Shared test utilities: acceptance-criterion result reporting.

Each acceptance test records a per-criterion verdict; a terminal-summary
hook prints one PASS/FAIL line per criterion at the end of the run so the
verdicts are visible even when pytest captures stdout.
"""
import pytest

ACCEPTANCE_RESULTS = []


def record_criterion(number: int, passed: bool, detail: str):
    ACCEPTANCE_RESULTS.append((number, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} -- {detail}")
