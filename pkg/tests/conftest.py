import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        report.user_properties.append(("criterion", marker.args))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            for name, value in getattr(rep, "user_properties", ()):
                if name == "criterion":
                    rows.append((value[0], value[1], rep.outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(rows):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if outcome == 'passed' else 'FAIL'}  {title}")
