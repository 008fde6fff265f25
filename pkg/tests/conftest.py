"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")

_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    k = int(match.group(1))
    if report.when == "call":
        _outcomes[k] = report.outcome
    elif report.failed:
        # setup/teardown crash counts as a failure of the criterion
        _outcomes[k] = "failed"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        word = "PASS" if _outcomes[k] == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {k} {word}")
