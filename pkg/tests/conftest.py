import pytest

# criterion number -> list of (label, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        for label, passed, detail in ACCEPTANCE[number]:
            status = "PASS" if passed else "FAIL"
            terminalreporter.write_line(f"[{status}] criterion {number}: {label} -- {detail}")
