import re

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}
_CRITERION = re.compile(r"test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    m = _CRITERION.match(name)
    if m:
        ACCEPTANCE_RESULTS[int(m.group(1))] = (name, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for idx in sorted(ACCEPTANCE_RESULTS):
        name, ok = ACCEPTANCE_RESULTS[idx]
        terminalreporter.write_line(f"criterion {idx:2d}: {'PASS' if ok else 'FAIL'}  {name}")
