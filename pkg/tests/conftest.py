"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::", 1)[1]
    if report.when == "call" or report.failed:
        if report.failed:
            _criteria[name] = "FAIL"
        else:
            _criteria.setdefault(name, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria.items():
        terminalreporter.write_line(f"{outcome}  {name}")
