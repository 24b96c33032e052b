import re

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py::test_(criterion_\d+\w*)", report.nodeid)
    if not match:
        return
    if report.when == "call" or report.failed:
        _criteria[match.group(1)] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[1])):
        terminalreporter.write_line(f"{_criteria[name]}  {name}")
