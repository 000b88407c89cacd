import pytest

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label, title = marker.args
    if report.when == "call" or report.failed:
        passed = report.passed and _acceptance.get(label, (None, True))[1]
        _acceptance[label] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s[2:])):
        title, passed = _acceptance[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label:<5} {title}")
