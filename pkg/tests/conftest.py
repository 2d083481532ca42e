import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    crit = getattr(getattr(item, "function", None), "criterion", None)
    if crit and report.when == "call":
        report.user_properties.append(("criterion", crit))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status in ("passed", "failed"):
        for report in terminalreporter.stats.get(status, []):
            for key, (number, title) in report.user_properties:
                if key == "criterion":
                    lines.append((number, "PASS" if status == "passed" else "FAIL", title))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, status, title in sorted(lines):
            terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
