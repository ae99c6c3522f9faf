"""Prints one pass/fail line per acceptance criterion at the end of a run."""

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance" in report.nodeid and name.startswith("test_criterion"):
        _results[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_results, key=lambda s: int(s.split("_")[2])):
        outcome = _results[name].upper()
        label = name.replace("test_", "").replace("_", " ")
        terminalreporter.write_line(f"{label}: {outcome}")
