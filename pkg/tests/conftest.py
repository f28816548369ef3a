"""Collects the acceptance-criteria verdicts and prints them after the run.

Each test in test_acceptance.py registers exactly one line; the summary
hook emits them once terminal capture is released, so they survive tee.
"""

ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
