import os
import re

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA: dict[int, tuple[str, str]] = {}
_PATTERN = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    name = m.group(2).replace("_", " ")
    if report.when == "call" or report.failed:
        status = "PASS" if report.passed else "FAIL"
        if _CRITERIA.get(k, (None, "PASS"))[1] == "FAIL":
            status = "FAIL"
        _CRITERIA[k] = (name, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        name, status = _CRITERIA[k]
        terminalreporter.write_line(f"{status}  criterion {k:2d}: {name}")
