"""Shared pytest plumbing: the acceptance-criteria summary block."""

CRITERION_LINES = {}


def record_criterion(number, ok, detail):
    state = "PASS" if ok else "FAIL"
    CRITERION_LINES[number] = f"criterion {number:2d}: {state}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERION_LINES):
        terminalreporter.write_line(CRITERION_LINES[number])
