"""Shared pytest plumbing: the acceptance-criteria summary block.

Acceptance tests record one line per criterion; the lines are echoed at the
end of the run so the verdicts are visible even when individual tests pass
(pytest swallows stdout of passing tests by default).
"""

_criterion_lines = []


def record_criterion(line):
    _criterion_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)
