def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance-criterion verdict lines at the end of the run."""
    try:
        from test_acceptance import REPORT_LINES
    except ImportError:
        return
    if REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT_LINES):
            terminalreporter.write_line(line)
