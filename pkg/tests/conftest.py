"""Test-session plumbing: echo the acceptance-criterion result lines in
the terminal summary, where output capture cannot hide them."""
import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_log.LINES:
        terminalreporter.write_line(line)
