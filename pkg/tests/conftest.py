import _acceptance_log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_log.lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_log.lines:
            terminalreporter.write_line(line)
