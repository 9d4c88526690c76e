"""Shared pytest hooks: print one verdict line per acceptance criterion."""

_CRITERIA: dict = {}


def record_criterion(num: int, verdict: str) -> None:
    _CRITERIA[num] = verdict


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        terminalreporter.write_line(
            "criterion %02d: %s" % (num, _CRITERIA[num]))
