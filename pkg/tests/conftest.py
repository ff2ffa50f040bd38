"""Shared pytest hooks: the acceptance scoreboard.

The acceptance tests record one verdict line each; echoing them from the
terminal-summary hook keeps the scoreboard visible under default output
capture, where in-test prints from passing tests are swallowed.
"""

_VERDICTS = []


def record_verdict(line: str) -> None:
    _VERDICTS.append(line)


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance scoreboard")
    for line in _VERDICTS:
        terminalreporter.write_line(line)
