import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, printed uncaptured."""
    rows = []
    for outcome, status in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(report, "nodeid", ""))
            if m:
                rows.append((int(m.group(1)), m.group(2), status))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, status in sorted(rows):
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {name}")
